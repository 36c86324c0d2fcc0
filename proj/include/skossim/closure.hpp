#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "skossim/prefix_map.hpp"
#include "skossim/rdf_store.hpp"

namespace skossim {

/// Which nodes receive a self-loop under reflexive closure.
struct ReflexiveScope {
    enum class Kind { PredicateNodes, Class };

    Kind kind = Kind::PredicateNodes;
    std::string class_iri;  // set when kind == Class

    static ReflexiveScope predicate_nodes() { return {}; }
    static ReflexiveScope of_class(std::string iri) { return {Kind::Class, std::move(iri)}; }

    friend bool operator==(const ReflexiveScope&, const ReflexiveScope&) = default;
};

/// Parses `predicate-nodes` or `class:<curie-or-iri>`.
ReflexiveScope parse_reflexive_scope(std::string_view text, const PrefixMap& prefixes);

struct ClosureRequest {
    std::string predicate;
    bool transitive = false;
    bool reflexive = false;
    bool symmetric = false;
    ReflexiveScope reflexive_scope;
};

/// Adds (x, p, z) for every pair joined by a p-path of length >= 1. Cycles are
/// fine. Returns the number of triples added.
std::size_t transitive_closure(TripleStore& store, std::string_view predicate);

/// Adds (n, p, n) for every n in scope. Literals never become subjects.
std::size_t reflexive_closure(TripleStore& store, std::string_view predicate, const ReflexiveScope& scope);

/// Adds (y, p, x) for every (x, p, y) whose object can be a subject.
std::size_t symmetric_closure(TripleStore& store, std::string_view predicate);

/// Applies the requested closures as symmetric, then transitive, then
/// reflexive, which yields the joint fixpoint. Throws ValidationError when no
/// closure flag is set.
std::size_t apply_closure(TripleStore& store, const ClosureRequest& request);

}  // namespace skossim
