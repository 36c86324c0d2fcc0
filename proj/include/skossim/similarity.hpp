#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "skossim/context.hpp"
#include "skossim/features.hpp"
#include "skossim/rational.hpp"
#include "skossim/rdf_store.hpp"

namespace skossim {

/// Value of SIM(X, Y) when F(X) is empty.
enum class EmptyPolicy { One, Zero };

std::string_view to_string(EmptyPolicy policy) noexcept;
EmptyPolicy parse_empty_policy(std::string_view text);

/// Asymmetric similarity: the share of X's features that Y also has,
/// |F(X) ∩ F(Y)| / |F(X)|. SIM(X, Y) = 1 exactly when F(X) ⊆ F(Y).
Rational sim_ratio(const FeatureSet& x, const FeatureSet& y, EmptyPolicy policy = EmptyPolicy::One);

/// Class and relation IRIs of the context a matrix was computed under.
struct ContextFingerprint {
    std::string class_iri;
    std::vector<std::string> relations;

    static ContextFingerprint of(const ContextSpec& spec);
    friend bool operator==(const ContextFingerprint&, const ContextFingerprint&) = default;
};

/// Dense n×n matrix; at(r, c) = SIM(population[r], population[c]).
class SimilarityMatrix {
public:
    SimilarityMatrix(std::vector<std::string> population, std::vector<Rational> values, EmptyPolicy policy,
                     ContextFingerprint fingerprint);

    std::size_t size() const noexcept { return population_.size(); }
    const std::vector<std::string>& population() const noexcept { return population_; }
    const Rational& at(std::size_t row, std::size_t col) const { return values_[row * size() + col]; }
    std::span<const Rational> row(std::size_t r) const { return {values_.data() + r * size(), size()}; }
    std::span<const Rational> values() const noexcept { return values_; }
    std::optional<std::size_t> index_of(std::string_view iri) const;
    /// SIM(x, y) by IRI; throws std::out_of_range if either is not in the population.
    const Rational& sim(std::string_view x, std::string_view y) const;

    EmptyPolicy policy() const noexcept { return policy_; }
    const ContextFingerprint& fingerprint() const noexcept { return fingerprint_; }

    /// Cell-by-cell equality of population and values.
    friend bool operator==(const SimilarityMatrix& a, const SimilarityMatrix& b) {
        return a.population_ == b.population_ && a.values_ == b.values_;
    }

private:
    std::vector<std::string> population_;
    std::vector<Rational> values_;
    EmptyPolicy policy_;
    ContextFingerprint fingerprint_;
};

/// Throws ValidationError when `population` is empty or repeats an IRI.
void check_population(std::span<const std::string> population);

/// Computes the matrix over `population` using `table` for extraction. Rows are
/// split across `workers` threads; the result does not depend on the worker
/// count.
SimilarityMatrix similarity_matrix(FeatureTable& table, std::span<const std::string> population,
                                   EmptyPolicy policy = EmptyPolicy::One, unsigned workers = 1);

SimilarityMatrix similarity_matrix(const TripleStore& store, const ContextSpec& spec,
                                   std::span<const std::string> population,
                                   EmptyPolicy policy = EmptyPolicy::One, unsigned workers = 1);

}  // namespace skossim
