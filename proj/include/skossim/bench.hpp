#pragma once

#include <cstddef>
#include <cstdint>

#include "skossim/similarity.hpp"
#include "skossim/synth.hpp"

namespace skossim {

struct BenchReport {
    double load_ms = 0;
    double closure_ms = 0;
    double extraction_ms = 0;
    double matrix_ms = 0;
    std::size_t n_concepts = 0;
    std::size_t n_triples = 0;
    unsigned workers = 1;
    std::size_t extractions = 0;         // performed by the feature cache
    std::size_t distinct_resources = 0;  // resources whose features were requested
    std::uint64_t checksum = 0;
};

/// FNV-1a over every cell's numerator and denominator, row-major.
std::uint64_t matrix_checksum(const SimilarityMatrix& matrix) noexcept;

/// Generates a synthetic graph, closes skos:broader (transitive and reflexive
/// over skos:Concept), then computes the similarity matrix of all concepts
/// under a context pooling skos:broader and skos:relatedMatch.
BenchReport bench_matrix(const SynthParams& params, unsigned workers);

}  // namespace skossim
