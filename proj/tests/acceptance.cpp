// Acceptance suite: one line per criterion, exit status 1 if any fails.
// Every check is exact (rational equality) unless a time budget is stated.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixture.hpp"
#include "oracles.hpp"
#include "skossim/analysis.hpp"
#include "skossim/bench.hpp"
#include "skossim/cli.hpp"
#include "skossim/closure.hpp"
#include "skossim/export.hpp"
#include "skossim/ntriples.hpp"
#include "skossim/similarity.hpp"
#include "skossim/synth.hpp"
#include "skossim/vocab.hpp"

namespace {

using namespace skossim;
using skossim::testing::habitat;
using skossim::testing::species;
namespace fs = std::filesystem;

struct CheckFailed {
    std::string what;
};

#define CHECK(cond, msg)                                                                 \
    do {                                                                                 \
        if (!(cond)) {                                                                   \
            std::ostringstream os_;                                                      \
            os_ << __LINE__ << ": " << msg;                                              \
            throw CheckFailed{os_.str()};                                                \
        }                                                                                \
    } while (0)

std::string str(const Rational& r) { return r.to_string(); }

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

ContextSpec context(const char* name) { return load_context(skossim::testing::read_data(name)); }
Population population(const char* name) { return parse_population(skossim::testing::read_data(name)); }

// --- 1 ---------------------------------------------------------------------

void context_one_habitats() {
    auto start = std::chrono::steady_clock::now();
    TripleStore store = skossim::testing::table1_store();
    ContextSpec spec = context("context1.ctx");
    FeatureTable table(store, spec);
    auto m = similarity_matrix(table, population("habitats.txt"));
    const double ms = elapsed_ms(start);

    const Rational forward = m.sim(habitat("B2.1"), habitat("B2.31"));
    const Rational backward = m.sim(habitat("B2.31"), habitat("B2.1"));
    CHECK(forward == Rational(3, 11), "SIM(B2.1,B2.31) = " << str(forward));
    CHECK(backward == Rational(1, 6), "SIM(B2.31,B2.1) = " << str(backward));
    const auto shared = intersection_size(table.features(habitat("B2.1")), table.features(habitat("B2.31")));
    CHECK(shared == 3, "shared features " << shared);
    CHECK(table.features(habitat("B2.1")).size() == 11, "|F(B2.1)|");
    CHECK(table.features(habitat("B2.31")).size() == 18, "|F(B2.31)|");
    CHECK(ms < 1000.0, "runtime " << ms << " ms");
}

// --- 2 ---------------------------------------------------------------------

void context_two_habitats() {
    TripleStore store = skossim::testing::table1_store();
    ClosureRequest request;
    request.predicate = std::string(vocab::skos_broader);
    request.transitive = true;
    request.reflexive = true;
    request.reflexive_scope = ReflexiveScope::of_class(std::string(vocab::skos_concept));
    apply_closure(store, request);

    auto m = similarity_matrix(store, context("context2.ctx"), population("habitats.txt"));
    CHECK(m.size() == 11, "population size " << m.size());
    for (const auto& x : m.population()) {
        CHECK(m.sim(habitat("B2"), x).is_one(), "SIM(B2," << x << ") = " << str(m.sim(habitat("B2"), x)));
    }
    for (const char* d : {"B2.11", "B2.12", "B2.13", "B2.14"}) {
        CHECK(m.sim(habitat("B2.1"), habitat(d)).is_one(), "SIM(B2.1," << d << ")");
    }
    CHECK(m.sim(habitat("B2.11"), habitat("B2.1")) == Rational(2, 3),
          "SIM(B2.11,B2.1) = " << str(m.sim(habitat("B2.11"), habitat("B2.1"))));
}

// --- 3 ---------------------------------------------------------------------

void species_matrix() {
    TripleStore store = skossim::testing::table1_store();
    symmetric_closure(store, vocab::skos_related_match);
    auto m = similarity_matrix(store, context("context1.ctx"), population("species.txt"));

    const auto longipes = species("atriplex-longipes");
    const auto glabriuscula = species("atriplex-glabriuscula");
    CHECK(m.sim(longipes, glabriuscula).is_one(), "SIM(longipes,glabriuscula) = " << str(m.sim(longipes, glabriuscula)));
    CHECK(m.sim(glabriuscula, longipes) == Rational(1, 2),
          "SIM(glabriuscula,longipes) = " << str(m.sim(glabriuscula, longipes)));

    // Heatmap convention: the PGM column of a resource holds SIM(resource, ·).
    const auto valeriana = species("valeriana-salina");
    const std::size_t col = *m.index_of(valeriana);
    for (const auto& x : m.population()) {
        const Rational& v = m.sim(valeriana, x);
        CHECK(v.is_zero() || v.is_one(), "SIM(valeriana," << x << ") = " << str(v));
    }
    std::istringstream pgm(render_pgm(m));
    std::string magic;
    std::size_t w = 0, h = 0, maxval = 0;
    pgm >> magic >> w >> h >> maxval;
    for (std::size_t j = 0; j < h; ++j) {
        for (std::size_t i = 0; i < w; ++i) {
            int g = 0;
            pgm >> g;
            if (i == col) {
                CHECK(g == 0 || g == 255, "valeriana column gray " << g << " at row " << j);
            }
        }
    }
}

// --- 4 ---------------------------------------------------------------------

void containment() {
    TripleStore store = skossim::testing::table1_store();
    auto report = containment_report(similarity_matrix(store, context("context1.ctx"), population("habitats.txt")));
    auto has = [&](const std::string& x, const std::string& y, ContainmentRelation rel) {
        return std::find(report.begin(), report.end(), ContainmentEntry{x, y, rel}) != report.end();
    };
    CHECK(has(habitat("B2.3"), habitat("B2.32"), ContainmentRelation::Equivalent), "(B2.3, B2.32) not Equivalent");
    CHECK(has(habitat("B2.1"), habitat("B2.31"), ContainmentRelation::Overlap), "(B2.1, B2.31) not Overlap");
}

// --- 5 ---------------------------------------------------------------------

constexpr int kCases = 200;

FeatureSet random_set(std::mt19937& rng, std::size_t universe, std::size_t max_size) {
    std::uniform_int_distribution<std::size_t> size(0, max_size);
    std::uniform_int_distribution<FeatureId> id(0, static_cast<FeatureId>(universe - 1));
    std::vector<FeatureId> ids;
    for (std::size_t n = size(rng); n > 0; --n) {
        ids.push_back(id(rng));
    }
    return FeatureSet(std::move(ids));
}

void property_suites() {
    auto start = std::chrono::steady_clock::now();
    std::mt19937 rng(20100501);

    // range, containment characterization, equal-size symmetry, monotonicity
    int symmetric_cases = 0;
    for (int i = 0; i < kCases || symmetric_cases < kCases; ++i) {
        FeatureSet x = random_set(rng, 10, 7), y = random_set(rng, 10, 7);
        const Rational s = sim_ratio(x, y, EmptyPolicy::One);
        CHECK(s >= Rational::zero() && s <= Rational::one(), "range " << str(s));
        const bool subset = std::includes(y.begin(), y.end(), x.begin(), x.end());
        CHECK(s.is_one() == subset, "containment iff, case " << i);
        if (x.size() == y.size()) {
            ++symmetric_cases;
            CHECK(sim_ratio(x, y) == sim_ratio(y, x), "equal-size symmetry, case " << i);
        }
        if (!x.empty()) {
            std::vector<FeatureId> xs = x.ids(), ys = y.ids();
            xs.push_back(500);
            ys.push_back(500);
            CHECK(sim_ratio(FeatureSet(xs), FeatureSet(ys)) >= sim_ratio(x, y), "monotonicity, case " << i);
        }
    }

    // transitive closure vs boolean matrix fixpoint, graphs of <= 50 nodes
    const Term p = Term::iri("urn:p");
    auto node = [](std::size_t i) { return Term::iri("urn:n" + std::to_string(i)); };
    for (int c = 0; c < kCases; ++c) {
        std::uniform_int_distribution<std::size_t> size(1, 50);
        const std::size_t n = size(rng);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        TripleStore store;
        for (std::size_t e = std::uniform_int_distribution<std::size_t>(0, 2 * n)(rng); e > 0; --e) {
            auto a = pick(rng), b = pick(rng);
            if (c % 2 == 0 && a >= b) {  // half the cases are DAGs
                if (a == b) {
                    continue;
                }
                std::swap(a, b);
            }
            edges.emplace_back(a, b);
            store.insert(Triple{node(a), p, node(b)});
        }
        transitive_closure(store, "urn:p");
        const auto reach = skossim::testing::boolean_closure(n, edges);
        std::size_t expected = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                expected += reach[i][j];
                CHECK(store.contains(Triple{node(i), p, node(j)}) == static_cast<bool>(reach[i][j]),
                      "closure pair " << i << "," << j << " case " << c);
            }
        }
        CHECK(store.size() == expected, "closure size case " << c);
    }

    // engine matrix vs naive double loop, graphs of <= 200 resources
    const ContextSpec spec = load_context("[<urn:C>]->{ },{(<urn:rel:a>, Inter),(<urn:rel:b>, Inter)}");
    const std::vector<std::string> predicates{"urn:rel:a", "urn:rel:b"};
    for (int c = 0; c < kCases; ++c) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 200)(rng);
        TripleStore store;
        std::vector<std::string> pop;
        std::uniform_int_distribution<std::size_t> feats(0, 30), obj(0, 50), pred(0, 2);
        for (std::size_t i = 0; i < n; ++i) {
            pop.push_back("urn:r:" + std::to_string(i));
            for (std::size_t k = feats(rng); k > 0; --k) {
                const std::size_t which = pred(rng);
                store.insert(Triple{Term::iri(pop.back()),
                                    Term::iri(which < 2 ? predicates[which] : std::string("urn:rel:other")),
                                    Term::iri("urn:o:" + std::to_string(obj(rng)))});
            }
        }
        const EmptyPolicy policy = c % 2 ? EmptyPolicy::One : EmptyPolicy::Zero;
        auto m = similarity_matrix(store, spec, pop, policy, 1 + c % 3);
        auto naive = skossim::testing::naive_feature_map(store.triples(), predicates);
        const Rational empty_value = policy == EmptyPolicy::One ? Rational::one() : Rational::zero();
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t col = 0; col < n; ++col) {
                CHECK(m.at(r, col) == skossim::testing::naive_sim(naive[pop[r]], naive[pop[col]], empty_value),
                      "matrix oracle cell " << r << "," << col << " case " << c);
            }
        }
    }

    // chain closure edge counts
    for (std::size_t k = 2; k < 2 + kCases; ++k) {
        TripleStore store;
        for (std::size_t i = 0; i + 1 < k; ++i) {
            store.insert(Triple{node(i), p, node(i + 1)});
        }
        transitive_closure(store, "urn:p");
        CHECK(store.size() == k * (k - 1) / 2, "chain " << k << " transitive " << store.size());
        reflexive_closure(store, "urn:p", ReflexiveScope::predicate_nodes());
        CHECK(store.size() == k * (k - 1) / 2 + k, "chain " << k << " reflexive " << store.size());
    }

    const double ms = elapsed_ms(start);
    CHECK(ms < 10000.0, "property suites took " << ms << " ms");
}

// --- 6 ---------------------------------------------------------------------

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("skossim_acceptance_" + std::to_string(std::random_device{}()))) {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string run_matrix(const std::vector<std::string>& base, const std::string& format, const std::string& threads) {
    std::vector<std::string> args = base;
    args.insert(args.end(), {"--format", format, "--threads", threads});
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    CHECK(code == 0, "matrix exit " << code << ": " << err.str());
    return out.str();
}

void check_thread_invariance(const std::vector<std::string>& base, const std::string& label) {
    for (const std::string format : {"csv", "pgm"}) {
        const std::string one = run_matrix(base, format, "1");
        const std::string eight = run_matrix(base, format, "8");
        CHECK(!one.empty(), label << " " << format << " output empty");
        CHECK(one == eight, label << " " << format << " differs between --threads 1 and 8");
    }
}

void determinism() {
    check_thread_invariance({"matrix", "--data", skossim::testing::data_path("table1.nt"), "--context",
                             skossim::testing::data_path("context1.ctx"), "--population",
                             skossim::testing::data_path("habitats.txt")},
                            "fixture");

    SynthParams params;
    params.n_concepts = 1000;
    params.link_density = 10;
    TripleStore store = generate_taxonomy(params);
    generate_links(store, params);
    transitive_closure(store, vocab::skos_broader);
    reflexive_closure(store, vocab::skos_broader, ReflexiveScope::of_class(std::string(vocab::skos_concept)));

    TempDir dir;
    std::ofstream(dir.file("synth.nt")) << serialize_ntriples(store);
    std::ofstream(dir.file("synth.ctx"))
        << "PREFIX skos: <http://www.w3.org/2004/02/skos/core#>\n"
           "[skos:Concept]->{ },{(skos:broader, Inter),(skos:relatedMatch, Inter)}\n";
    {
        std::ofstream pop(dir.file("synth.txt"));
        for (const auto& iri : synth_population(params)) {
            pop << iri << "\n";
        }
    }
    check_thread_invariance({"matrix", "--data", dir.file("synth.nt"), "--context", dir.file("synth.ctx"),
                             "--population", dir.file("synth.txt")},
                            "synthetic");

    BenchReport r1 = bench_matrix(params, 1);
    BenchReport r8 = bench_matrix(params, 8);
    CHECK(r1.checksum == r8.checksum, "bench checksum differs across workers");
    CHECK(r1.extractions == r1.distinct_resources && r1.distinct_resources == params.n_concepts,
          "cache extractions " << r1.extractions << " vs distinct " << r1.distinct_resources);
    CHECK(r8.extractions == r8.distinct_resources, "cache extractions with 8 workers " << r8.extractions);
}

// --- 7 ---------------------------------------------------------------------

void formats() {
    TripleStore store = skossim::testing::table1_store();
    auto m = similarity_matrix(store, context("context1.ctx"), population("habitats.txt"));
    const std::string csv = export_csv(m, ValueFormat::Decimal);
    const std::size_t r = *m.index_of(habitat("B2.1"));
    const std::size_t c = *m.index_of(habitat("B2.31"));
    auto cell = [&](std::size_t row, std::size_t col) {
        std::istringstream in(csv);
        std::string line;
        for (std::size_t i = 0; i <= row + 1; ++i) {
            std::getline(in, line);
        }
        std::istringstream fields(line);
        std::string field;
        for (std::size_t i = 0; i <= col + 1; ++i) {
            std::getline(fields, field, ',');
        }
        return field;
    };
    CHECK(cell(r, c) == "0.272727", "3/11 rendered " << cell(r, c));
    CHECK(cell(c, r) == "0.166667", "1/6 rendered " << cell(c, r));

    CHECK(pgm_gray(Rational::one()) == 0, "gray(1)");
    CHECK(pgm_gray(Rational::zero()) == 255, "gray(0)");
    CHECK(pgm_gray(Rational(1, 2)) == 128, "gray(1/2) = " << int(pgm_gray(Rational(1, 2))));

    CHECK(parse_csv(export_csv(m, ValueFormat::Rational)) == m, "rational CSV round trip (habitats)");
    TripleStore linked = skossim::testing::table1_linked();
    auto s = similarity_matrix(linked, context("context1.ctx"), population("species.txt"));
    CHECK(parse_csv(export_csv(s, ValueFormat::Rational)) == s, "rational CSV round trip (species)");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void()>>> criteria{
        {"AC1 context-1 habitat matrix: SIM(B2.1,B2.31)=3/11, SIM(B2.31,B2.1)=1/6, 3 shared, <1s",
         context_one_habitats},
        {"AC2 context-2 habitat matrix: B2 row all 1, B2.1 covers descendants, SIM(B2.11,B2.1)=2/3",
         context_two_habitats},
        {"AC3 species matrix: Atriplex longipes/glabriuscula 1 and 1/2, valeriana salina column in {0,1}",
         species_matrix},
        {"AC4 containment report: (B2.3,B2.32) Equivalent, (B2.1,B2.31) Overlap", containment},
        {"AC5 property suites (>=200 cases each, <10s)", property_suites},
        {"AC6 determinism: --threads 1 vs 8 byte-identical CSV/PGM, cache statistic", determinism},
        {"AC7 format exactness: 0.272727, 0.166667, gray 0/255/128, rational CSV round trip", formats},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        auto start = std::chrono::steady_clock::now();
        try {
            run();
            std::cout << "[PASS] " << name << " (" << static_cast<long>(elapsed_ms(start)) << " ms)\n";
        } catch (const CheckFailed& f) {
            ++failed;
            std::cout << "[FAIL] " << name << " -- line " << f.what << "\n";
        } catch (const std::exception& e) {
            ++failed;
            std::cout << "[FAIL] " << name << " -- exception: " << e.what() << "\n";
        }
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " acceptance criteria passed\n";
    return failed == 0 ? 0 : 1;
}
