#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "skossim/rational.hpp"
#include "skossim/similarity.hpp"

namespace skossim {

/// How two resources relate, read off the pair (SIM(X,Y), SIM(Y,X)).
enum class ContainmentRelation {
    Equivalent,              // F(X) = F(Y)
    FirstContainedInSecond,  // F(X) ⊂ F(Y)
    SecondContainedInFirst,  // F(Y) ⊂ F(X)
    Disjoint,
    Overlap,
};

std::string_view to_string(ContainmentRelation relation) noexcept;

/// Checks, in order: both 1, sim_xy 1, sim_yx 1, both 0, otherwise overlap.
ContainmentRelation classify_pair(const Rational& sim_xy, const Rational& sim_yx) noexcept;

struct ContainmentEntry {
    std::string first;
    std::string second;
    ContainmentRelation relation;

    friend bool operator==(const ContainmentEntry&, const ContainmentEntry&) = default;
};

/// One entry per unordered pair, first before second in population order.
std::vector<ContainmentEntry> containment_report(const SimilarityMatrix& matrix);

enum class RankDirection {
    FromQuery,  // SIM(query, candidate): how much of the query each candidate covers
    ToQuery,    // SIM(candidate, query): how much of each candidate the query covers
};

RankDirection parse_rank_direction(std::string_view text);

struct RankEntry {
    std::string resource;
    Rational value;

    friend bool operator==(const RankEntry&, const RankEntry&) = default;
};

/// Every population member except the query, by value descending then IRI
/// ascending. Throws ValidationError when the query is not in the population.
std::vector<RankEntry> rank_by_similarity(const SimilarityMatrix& matrix, std::string_view query,
                                          RankDirection direction);

/// Ordered list of distinct absolute IRIs.
class Population {
public:
    /// Throws ValidationError on an empty list, duplicates or non-absolute IRIs.
    explicit Population(std::vector<std::string> members);

    const std::vector<std::string>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    operator std::span<const std::string>() const noexcept { return members_; }

private:
    std::vector<std::string> members_;
};

/// One IRI per line (bare or in angle brackets). Blank lines and lines starting
/// with `#` are skipped. Errors carry the 1-based line number.
Population parse_population(std::string_view text);

}  // namespace skossim
