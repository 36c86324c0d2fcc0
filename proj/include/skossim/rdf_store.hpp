#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "skossim/term.hpp"

namespace skossim {

using TermId = std::uint32_t;

/// A triple of interned term ids: subject, predicate, object.
using IdTriple = std::array<TermId, 3>;

/// In-memory RDF graph with set semantics.
///
/// Terms are interned to dense ids. Triples are indexed by subject,
/// predicate, object and (subject, predicate). Mutation is single-writer;
/// once loading and closure are done every const member is safe for
/// concurrent readers.
class TripleStore {
public:
    TripleStore() = default;

    /// Inserts `t`; returns true when it was not already present. Throws
    /// std::invalid_argument if the subject is a literal or the predicate is
    /// not an IRI.
    bool insert(const Triple& t);
    bool insert(TermId s, TermId p, TermId o);

    TermId intern(const Term& term);
    std::optional<TermId> lookup(const Term& term) const;
    std::optional<TermId> lookup_iri(std::string_view iri) const;
    const Term& term(TermId id) const { return terms_.at(id); }

    std::size_t size() const noexcept { return triples_.size(); }
    bool empty() const noexcept { return triples_.empty(); }
    bool contains(const Triple& t) const;
    bool contains(TermId s, TermId p, TermId o) const;

    /// Triples matching every bound position, in insertion order.
    std::vector<Triple> match(const std::optional<Term>& s, const std::optional<Term>& p,
                              const std::optional<Term>& o) const;
    std::vector<IdTriple> match_ids(std::optional<TermId> s, std::optional<TermId> p,
                                    std::optional<TermId> o) const;

    std::vector<Term> objects_of(const Term& s, const Term& p) const;
    /// Object ids for (s, p, ?) without copying; empty when none.
    const std::vector<TermId>& object_ids(TermId s, TermId p) const;

    /// Subjects typed `class_iri` via rdf:type.
    std::vector<Term> instances_of(const Term& class_iri) const;

    /// All triples in insertion order.
    std::vector<Triple> triples() const;
    const std::vector<IdTriple>& id_triples() const noexcept { return triples_; }

    /// Set equality over the triples, independent of insertion order and ids.
    friend bool operator==(const TripleStore& a, const TripleStore& b);

private:
    struct IdTripleHash {
        std::size_t operator()(const IdTriple& t) const noexcept;
    };
    static std::uint64_t pair_key(TermId a, TermId b) noexcept {
        return (static_cast<std::uint64_t>(a) << 32) | b;
    }
    Triple materialize(const IdTriple& t) const;
    const std::vector<std::uint32_t>* postings(int position, TermId id) const;

    std::vector<Term> terms_;
    std::unordered_map<Term, TermId, TermHash> ids_;
    std::vector<IdTriple> triples_;
    std::unordered_set<IdTriple, IdTripleHash> present_;
    std::unordered_map<TermId, std::vector<std::uint32_t>> by_subject_;
    std::unordered_map<TermId, std::vector<std::uint32_t>> by_predicate_;
    std::unordered_map<TermId, std::vector<std::uint32_t>> by_object_;
    std::unordered_map<std::uint64_t, std::vector<TermId>> objects_by_sp_;
};

}  // namespace skossim
