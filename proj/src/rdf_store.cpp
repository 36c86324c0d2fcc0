#include "skossim/rdf_store.hpp"

#include <algorithm>
#include <stdexcept>

#include "skossim/vocab.hpp"

namespace skossim {

namespace {
const std::vector<TermId> kNoObjects;
}

std::size_t TripleStore::IdTripleHash::operator()(const IdTriple& t) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (TermId id : t) {
        h = (h ^ id) * 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
}

TermId TripleStore::intern(const Term& term) {
    if (auto it = ids_.find(term); it != ids_.end()) {
        return it->second;
    }
    auto id = static_cast<TermId>(terms_.size());
    terms_.push_back(term);
    ids_.emplace(term, id);
    return id;
}

std::optional<TermId> TripleStore::lookup(const Term& term) const {
    if (auto it = ids_.find(term); it != ids_.end()) {
        return it->second;
    }
    return std::nullopt;
}

std::optional<TermId> TripleStore::lookup_iri(std::string_view iri) const {
    if (!is_valid_iri_chars(iri)) {
        return std::nullopt;
    }
    return lookup(Term::iri(std::string(iri)));
}

bool TripleStore::insert(const Triple& t) {
    if (t.subject.is_literal()) {
        throw std::invalid_argument("literal in subject position: " + t.to_ntriples());
    }
    if (!t.predicate.is_iri()) {
        throw std::invalid_argument("predicate must be an IRI: " + t.to_ntriples());
    }
    return insert(intern(t.subject), intern(t.predicate), intern(t.object));
}

bool TripleStore::insert(TermId s, TermId p, TermId o) {
    if (s >= terms_.size() || p >= terms_.size() || o >= terms_.size()) {
        throw std::out_of_range("unknown term id");
    }
    if (terms_[s].is_literal() || !terms_[p].is_iri()) {
        throw std::invalid_argument("ill-formed triple");
    }
    IdTriple t{s, p, o};
    if (!present_.insert(t).second) {
        return false;
    }
    auto index = static_cast<std::uint32_t>(triples_.size());
    triples_.push_back(t);
    by_subject_[s].push_back(index);
    by_predicate_[p].push_back(index);
    by_object_[o].push_back(index);
    objects_by_sp_[pair_key(s, p)].push_back(o);
    return true;
}

bool TripleStore::contains(TermId s, TermId p, TermId o) const {
    return present_.count(IdTriple{s, p, o}) != 0;
}

bool TripleStore::contains(const Triple& t) const {
    auto s = lookup(t.subject);
    auto p = lookup(t.predicate);
    auto o = lookup(t.object);
    return s && p && o && contains(*s, *p, *o);
}

const std::vector<std::uint32_t>* TripleStore::postings(int position, TermId id) const {
    const auto& index = position == 0 ? by_subject_ : position == 1 ? by_predicate_ : by_object_;
    auto it = index.find(id);
    return it == index.end() ? nullptr : &it->second;
}

std::vector<IdTriple> TripleStore::match_ids(std::optional<TermId> s, std::optional<TermId> p,
                                             std::optional<TermId> o) const {
    std::vector<IdTriple> out;
    const std::array<std::optional<TermId>, 3> bound{s, p, o};

    if (s && p && o) {
        if (contains(*s, *p, *o)) {
            out.push_back({*s, *p, *o});
        }
        return out;
    }
    if (!s && !p && !o) {
        return triples_;
    }

    // Walk the shortest posting list among bound positions, filter the rest.
    const std::vector<std::uint32_t>* best = nullptr;
    for (int pos = 0; pos < 3; ++pos) {
        if (!bound[pos]) {
            continue;
        }
        const auto* list = postings(pos, *bound[pos]);
        if (list == nullptr) {
            return out;
        }
        if (best == nullptr || list->size() < best->size()) {
            best = list;
        }
    }
    for (std::uint32_t index : *best) {
        const IdTriple& t = triples_[index];
        bool ok = true;
        for (int pos = 0; pos < 3 && ok; ++pos) {
            ok = !bound[pos] || t[pos] == *bound[pos];
        }
        if (ok) {
            out.push_back(t);
        }
    }
    return out;
}

Triple TripleStore::materialize(const IdTriple& t) const {
    return Triple{terms_[t[0]], terms_[t[1]], terms_[t[2]]};
}

std::vector<Triple> TripleStore::match(const std::optional<Term>& s, const std::optional<Term>& p,
                                       const std::optional<Term>& o) const {
    std::array<std::optional<TermId>, 3> ids;
    const std::array<const std::optional<Term>*, 3> terms{&s, &p, &o};
    for (int pos = 0; pos < 3; ++pos) {
        if (*terms[pos]) {
            ids[pos] = lookup(**terms[pos]);
            if (!ids[pos]) {
                return {};
            }
        }
    }
    std::vector<Triple> out;
    for (const auto& t : match_ids(ids[0], ids[1], ids[2])) {
        out.push_back(materialize(t));
    }
    return out;
}

const std::vector<TermId>& TripleStore::object_ids(TermId s, TermId p) const {
    auto it = objects_by_sp_.find(pair_key(s, p));
    return it == objects_by_sp_.end() ? kNoObjects : it->second;
}

std::vector<Term> TripleStore::objects_of(const Term& s, const Term& p) const {
    auto sid = lookup(s);
    auto pid = lookup(p);
    std::vector<Term> out;
    if (!sid || !pid) {
        return out;
    }
    for (TermId o : object_ids(*sid, *pid)) {
        out.push_back(terms_[o]);
    }
    return out;
}

std::vector<Term> TripleStore::instances_of(const Term& class_iri) const {
    std::vector<Term> out;
    auto type = lookup_iri(vocab::rdf_type);
    auto cls = lookup(class_iri);
    if (!type || !cls) {
        return out;
    }
    for (const auto& t : match_ids(std::nullopt, *type, *cls)) {
        out.push_back(terms_[t[0]]);
    }
    return out;
}

std::vector<Triple> TripleStore::triples() const {
    std::vector<Triple> out;
    out.reserve(triples_.size());
    for (const auto& t : triples_) {
        out.push_back(materialize(t));
    }
    return out;
}

bool operator==(const TripleStore& a, const TripleStore& b) {
    if (a.size() != b.size()) {
        return false;
    }
    for (const auto& t : a.triples_) {
        auto s = b.lookup(a.terms_[t[0]]);
        auto p = b.lookup(a.terms_[t[1]]);
        auto o = b.lookup(a.terms_[t[2]]);
        if (!s || !p || !o || !b.contains(*s, *p, *o)) {
            return false;
        }
    }
    return true;
}

}  // namespace skossim
