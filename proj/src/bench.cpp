#include "skossim/bench.hpp"

#include <chrono>

#include "skossim/closure.hpp"
#include "skossim/context.hpp"
#include "skossim/features.hpp"
#include "skossim/vocab.hpp"

namespace skossim {

namespace {

constexpr std::string_view kBenchContext =
    "PREFIX skos: <http://www.w3.org/2004/02/skos/core#>\n"
    "[skos:Concept]->{ },{(skos:broader, Inter),(skos:relatedMatch, Inter)}\n";

template <typename F>
double time_ms(F&& f) {
    auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::uint64_t matrix_checksum(const SimilarityMatrix& matrix) noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h = (h ^ ((v >> (8 * i)) & 0xFF)) * 1099511628211ULL;
        }
    };
    for (const Rational& v : matrix.values()) {
        mix(v.numerator());
        mix(v.denominator());
    }
    return h;
}

BenchReport bench_matrix(const SynthParams& params, unsigned workers) {
    BenchReport report;
    report.n_concepts = params.n_concepts;
    report.workers = workers;

    TripleStore store;
    report.load_ms = time_ms([&] {
        store = generate_taxonomy(params);
        generate_links(store, params);
    });

    report.closure_ms = time_ms([&] {
        transitive_closure(store, vocab::skos_broader);
        reflexive_closure(store, vocab::skos_broader, ReflexiveScope::of_class(std::string(vocab::skos_concept)));
    });
    report.n_triples = store.size();

    const ContextSpec spec = load_context(kBenchContext);
    const std::vector<std::string> population = synth_population(params);
    FeatureTable table(store, spec);

    report.extraction_ms = time_ms([&] {
        for (const auto& iri : population) {
            table.features(iri);
        }
    });

    std::optional<SimilarityMatrix> matrix;
    report.matrix_ms = time_ms([&] { matrix = similarity_matrix(table, population, EmptyPolicy::One, workers); });

    report.extractions = table.total_extractions();
    report.distinct_resources = population.size();
    report.checksum = matrix_checksum(*matrix);
    return report;
}

}  // namespace skossim
