#include "skossim/synth.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "skossim/vocab.hpp"

namespace skossim {

std::string synth_concept_iri(std::size_t i) {
    return "urn:synth:concept:" + std::to_string(i);
}

std::string synth_target_iri(std::size_t j) {
    return "urn:synth:target:" + std::to_string(j);
}

std::vector<std::string> synth_population(const SynthParams& params) {
    std::vector<std::string> out;
    out.reserve(params.n_concepts);
    for (std::size_t i = 0; i < params.n_concepts; ++i) {
        out.push_back(synth_concept_iri(i));
    }
    return out;
}

TripleStore generate_taxonomy(const SynthParams& params) {
    TripleStore store;
    const TermId type = store.intern(Term::iri(std::string(vocab::rdf_type)));
    const TermId concept_class = store.intern(Term::iri(std::string(vocab::skos_concept)));
    const TermId broader = store.intern(Term::iri(std::string(vocab::skos_broader)));
    const std::size_t branching = std::max<std::size_t>(params.branching, 1);

    std::vector<TermId> nodes;
    nodes.reserve(params.n_concepts);
    for (std::size_t i = 0; i < params.n_concepts; ++i) {
        nodes.push_back(store.intern(Term::iri(synth_concept_iri(i))));
        store.insert(nodes[i], type, concept_class);
        if (i > 0) {
            store.insert(nodes[i], broader, nodes[(i - 1) / branching]);
        }
    }
    return store;
}

void generate_links(TripleStore& store, const SynthParams& params) {
    if (params.link_density <= 0.0 || params.n_targets == 0) {
        return;
    }
    const TermId related = store.intern(Term::iri(std::string(vocab::skos_related_match)));
    std::vector<TermId> targets;
    targets.reserve(params.n_targets);
    for (std::size_t j = 0; j < params.n_targets; ++j) {
        targets.push_back(store.intern(Term::iri(synth_target_iri(j))));
    }

    std::mt19937_64 rng(params.seed);
    std::poisson_distribution<std::size_t> count(params.link_density);
    std::vector<TermId> picked;
    for (std::size_t i = 0; i < params.n_concepts; ++i) {
        const TermId subject = store.intern(Term::iri(synth_concept_iri(i)));
        const std::size_t k = std::min(count(rng), targets.size());
        picked.clear();
        std::sample(targets.begin(), targets.end(), std::back_inserter(picked), k, rng);
        for (TermId t : picked) {
            store.insert(subject, related, t);
        }
    }
}

}  // namespace skossim
