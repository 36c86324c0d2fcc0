#include "skossim/similarity.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "skossim/error.hpp"

namespace skossim {

namespace {

// Runs body(i) for i in [0, n) on up to `workers` threads. Indices are handed
// out dynamically; callers must write only to slots owned by i.
template <typename Body>
void parallel_for(std::size_t n, unsigned workers, Body body) {
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&] {
        try {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
                body(i);
            }
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) {
                error = std::current_exception();
            }
            next.store(n);
        }
    };
    std::vector<std::thread> threads;
    threads.reserve(workers - 1);
    for (unsigned w = 1; w < workers; ++w) {
        threads.emplace_back(run);
    }
    run();
    for (auto& t : threads) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

}  // namespace

std::string_view to_string(EmptyPolicy policy) noexcept {
    return policy == EmptyPolicy::One ? "one" : "zero";
}

EmptyPolicy parse_empty_policy(std::string_view text) {
    if (text == "one") {
        return EmptyPolicy::One;
    }
    if (text == "zero") {
        return EmptyPolicy::Zero;
    }
    throw ValidationError("empty policy must be 'one' or 'zero', got '" + std::string(text) + "'");
}

Rational sim_ratio(const FeatureSet& x, const FeatureSet& y, EmptyPolicy policy) {
    if (x.empty()) {
        return policy == EmptyPolicy::One ? Rational::one() : Rational::zero();
    }
    return Rational(intersection_size(x, y), x.size());
}

ContextFingerprint ContextFingerprint::of(const ContextSpec& spec) {
    ContextFingerprint fp{spec.class_iri(), {}};
    for (const auto& rel : spec.relations()) {
        fp.relations.push_back(rel.predicate);
    }
    return fp;
}

SimilarityMatrix::SimilarityMatrix(std::vector<std::string> population, std::vector<Rational> values,
                                   EmptyPolicy policy, ContextFingerprint fingerprint)
    : population_(std::move(population)), values_(std::move(values)), policy_(policy),
      fingerprint_(std::move(fingerprint)) {
    if (values_.size() != population_.size() * population_.size()) {
        throw std::invalid_argument("matrix values do not match population size");
    }
}

std::optional<std::size_t> SimilarityMatrix::index_of(std::string_view iri) const {
    auto it = std::find(population_.begin(), population_.end(), iri);
    if (it == population_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - population_.begin());
}

const Rational& SimilarityMatrix::sim(std::string_view x, std::string_view y) const {
    auto r = index_of(x);
    auto c = index_of(y);
    if (!r || !c) {
        throw std::out_of_range("resource not in matrix population");
    }
    return at(*r, *c);
}

void check_population(std::span<const std::string> population) {
    if (population.empty()) {
        throw ValidationError("empty population");
    }
    std::unordered_set<std::string_view> seen;
    for (const auto& iri : population) {
        if (!seen.insert(iri).second) {
            throw ValidationError("duplicate population entry " + iri);
        }
    }
}

SimilarityMatrix similarity_matrix(FeatureTable& table, std::span<const std::string> population,
                                   EmptyPolicy policy, unsigned workers) {
    check_population(population);
    const std::size_t n = population.size();

    std::vector<const FeatureSet*> sets(n);
    parallel_for(n, workers, [&](std::size_t i) { sets[i] = &table.features(population[i]); });

    std::vector<Rational> values(n * n);
    parallel_for(n, workers, [&](std::size_t r) {
        const FeatureSet& x = *sets[r];
        Rational* row = values.data() + r * n;
        for (std::size_t c = 0; c < n; ++c) {
            row[c] = sim_ratio(x, *sets[c], policy);
        }
    });

    return SimilarityMatrix(std::vector<std::string>(population.begin(), population.end()), std::move(values),
                            policy, ContextFingerprint::of(table.spec()));
}

SimilarityMatrix similarity_matrix(const TripleStore& store, const ContextSpec& spec,
                                   std::span<const std::string> population, EmptyPolicy policy,
                                   unsigned workers) {
    FeatureTable table(store, spec);
    return similarity_matrix(table, population, policy, workers);
}

}  // namespace skossim
