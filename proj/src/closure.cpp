#include "skossim/closure.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "skossim/error.hpp"
#include "skossim/vocab.hpp"

namespace skossim {

namespace {

TermId intern_predicate(TripleStore& store, std::string_view predicate) {
    if (!is_valid_iri_chars(predicate)) {
        throw ValidationError("invalid predicate IRI '" + std::string(predicate) + "'");
    }
    return store.intern(Term::iri(std::string(predicate)));
}

}  // namespace

ReflexiveScope parse_reflexive_scope(std::string_view text, const PrefixMap& prefixes) {
    if (text == "predicate-nodes") {
        return ReflexiveScope::predicate_nodes();
    }
    constexpr std::string_view class_prefix = "class:";
    if (text.substr(0, class_prefix.size()) == class_prefix && text.size() > class_prefix.size()) {
        return ReflexiveScope::of_class(resolve_curie(prefixes, text.substr(class_prefix.size())));
    }
    throw ValidationError("reflexive scope must be 'predicate-nodes' or 'class:<curie-or-iri>', got '" +
                          std::string(text) + "'");
}

std::size_t transitive_closure(TripleStore& store, std::string_view predicate) {
    TermId p = intern_predicate(store, predicate);

    std::unordered_map<TermId, std::vector<TermId>> successors;
    std::vector<TermId> sources;
    for (const auto& t : store.match_ids(std::nullopt, p, std::nullopt)) {
        auto& out = successors[t[0]];
        if (out.empty()) {
            sources.push_back(t[0]);
        }
        out.push_back(t[2]);
    }
    std::sort(sources.begin(), sources.end());

    // Per-source reachability; collect first, insert after, so the adjacency
    // snapshot stays the original edge set.
    std::vector<IdTriple> additions;
    std::unordered_set<TermId> seen;
    std::vector<TermId> stack;
    for (TermId source : sources) {
        seen.clear();
        stack.assign(successors[source].begin(), successors[source].end());
        while (!stack.empty()) {
            TermId node = stack.back();
            stack.pop_back();
            if (!seen.insert(node).second) {
                continue;
            }
            if (!store.contains(source, p, node)) {
                additions.push_back({source, p, node});
            }
            if (auto it = successors.find(node); it != successors.end()) {
                for (TermId next : it->second) {
                    if (!seen.count(next)) {
                        stack.push_back(next);
                    }
                }
            }
        }
    }
    std::size_t added = 0;
    for (const auto& t : additions) {
        added += store.insert(t[0], t[1], t[2]) ? 1 : 0;
    }
    return added;
}

std::size_t reflexive_closure(TripleStore& store, std::string_view predicate, const ReflexiveScope& scope) {
    TermId p = intern_predicate(store, predicate);
    std::vector<TermId> nodes;
    if (scope.kind == ReflexiveScope::Kind::PredicateNodes) {
        for (const auto& t : store.match_ids(std::nullopt, p, std::nullopt)) {
            nodes.push_back(t[0]);
            nodes.push_back(t[2]);
        }
    } else {
        auto type = store.lookup_iri(vocab::rdf_type);
        auto cls = store.lookup_iri(scope.class_iri);
        if (type && cls) {
            for (const auto& t : store.match_ids(std::nullopt, *type, *cls)) {
                nodes.push_back(t[0]);
            }
        }
    }
    std::size_t added = 0;
    for (TermId n : nodes) {
        if (!store.term(n).is_literal()) {
            added += store.insert(n, p, n) ? 1 : 0;
        }
    }
    return added;
}

std::size_t symmetric_closure(TripleStore& store, std::string_view predicate) {
    TermId p = intern_predicate(store, predicate);
    std::size_t added = 0;
    for (const auto& t : store.match_ids(std::nullopt, p, std::nullopt)) {
        if (!store.term(t[2]).is_literal()) {
            added += store.insert(t[2], p, t[0]) ? 1 : 0;
        }
    }
    return added;
}

std::size_t apply_closure(TripleStore& store, const ClosureRequest& request) {
    if (!request.transitive && !request.reflexive && !request.symmetric) {
        throw ValidationError("closure request sets none of transitive, reflexive, symmetric");
    }
    std::size_t added = 0;
    if (request.symmetric) {
        added += symmetric_closure(store, request.predicate);
    }
    if (request.transitive) {
        added += transitive_closure(store, request.predicate);
    }
    if (request.reflexive) {
        added += reflexive_closure(store, request.predicate, request.reflexive_scope);
    }
    return added;
}

}  // namespace skossim
