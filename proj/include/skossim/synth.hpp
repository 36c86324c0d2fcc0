#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "skossim/rdf_store.hpp"

namespace skossim {

/// Knobs for synthetic taxonomies with relatedMatch-style links.
struct SynthParams {
    std::size_t n_concepts = 1000;
    std::size_t branching = 4;
    std::size_t n_targets = 500;
    double link_density = 10.0;  // mean links per concept
    std::uint64_t seed = 42;
};

/// IRI of the i-th synthetic concept / link target.
std::string synth_concept_iri(std::size_t i);
std::string synth_target_iri(std::size_t j);

/// Concept IRIs in generation order; the natural population for a synthetic graph.
std::vector<std::string> synth_population(const SynthParams& params);

/// Rooted tree under skos:broader. Concept i > 0 has parent (i - 1) / branching,
/// which gives a complete `branching`-ary tree. Every concept is typed
/// skos:Concept.
TripleStore generate_taxonomy(const SynthParams& params);

/// Adds skos:relatedMatch links from each concept to a Poisson(link_density)
/// number of distinct targets drawn uniformly from the pool. Deterministic for
/// a seed within one build.
void generate_links(TripleStore& store, const SynthParams& params);

}  // namespace skossim
