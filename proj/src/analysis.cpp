#include "skossim/analysis.hpp"

#include <algorithm>
#include <unordered_set>

#include "skossim/error.hpp"
#include "skossim/term.hpp"

namespace skossim {

std::string_view to_string(ContainmentRelation relation) noexcept {
    switch (relation) {
    case ContainmentRelation::Equivalent: return "Equivalent";
    case ContainmentRelation::FirstContainedInSecond: return "FirstContainedInSecond";
    case ContainmentRelation::SecondContainedInFirst: return "SecondContainedInFirst";
    case ContainmentRelation::Disjoint: return "Disjoint";
    case ContainmentRelation::Overlap: return "Overlap";
    }
    return "?";
}

ContainmentRelation classify_pair(const Rational& sim_xy, const Rational& sim_yx) noexcept {
    if (sim_xy.is_one() && sim_yx.is_one()) {
        return ContainmentRelation::Equivalent;
    }
    if (sim_xy.is_one()) {
        return ContainmentRelation::FirstContainedInSecond;
    }
    if (sim_yx.is_one()) {
        return ContainmentRelation::SecondContainedInFirst;
    }
    if (sim_xy.is_zero() && sim_yx.is_zero()) {
        return ContainmentRelation::Disjoint;
    }
    return ContainmentRelation::Overlap;
}

std::vector<ContainmentEntry> containment_report(const SimilarityMatrix& matrix) {
    std::vector<ContainmentEntry> out;
    const auto& pop = matrix.population();
    for (std::size_t x = 0; x < pop.size(); ++x) {
        for (std::size_t y = x + 1; y < pop.size(); ++y) {
            out.push_back({pop[x], pop[y], classify_pair(matrix.at(x, y), matrix.at(y, x))});
        }
    }
    return out;
}

RankDirection parse_rank_direction(std::string_view text) {
    if (text == "from-query") {
        return RankDirection::FromQuery;
    }
    if (text == "to-query") {
        return RankDirection::ToQuery;
    }
    throw ValidationError("direction must be 'from-query' or 'to-query', got '" + std::string(text) + "'");
}

std::vector<RankEntry> rank_by_similarity(const SimilarityMatrix& matrix, std::string_view query,
                                          RankDirection direction) {
    auto q = matrix.index_of(query);
    if (!q) {
        throw ValidationError("query " + std::string(query) + " is not in the population");
    }
    std::vector<RankEntry> out;
    const auto& pop = matrix.population();
    for (std::size_t i = 0; i < pop.size(); ++i) {
        if (i == *q) {
            continue;
        }
        const Rational& v = direction == RankDirection::FromQuery ? matrix.at(*q, i) : matrix.at(i, *q);
        out.push_back({pop[i], v});
    }
    std::sort(out.begin(), out.end(), [](const RankEntry& a, const RankEntry& b) {
        if (a.value != b.value) {
            return a.value > b.value;
        }
        return a.resource < b.resource;
    });
    return out;
}

Population::Population(std::vector<std::string> members) : members_(std::move(members)) {
    if (members_.empty()) {
        throw ValidationError("empty population");
    }
    std::unordered_set<std::string_view> seen;
    for (const auto& iri : members_) {
        if (!is_absolute_iri(iri)) {
            throw ValidationError("population entry is not an absolute IRI: " + iri);
        }
        if (!seen.insert(iri).second) {
            throw ValidationError("duplicate population entry " + iri);
        }
    }
}

Population parse_population(std::string_view text) {
    std::vector<std::string> members;
    std::unordered_set<std::string> seen;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        ++line_no;
        std::size_t end = std::min(text.find('\n', start), text.size());
        std::string_view line = text.substr(start, end - start);
        start = end + 1;

        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) {
            continue;
        }
        line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
        if (line.front() == '#') {
            continue;
        }
        if (line.size() >= 2 && line.front() == '<' && line.back() == '>') {
            line = line.substr(1, line.size() - 2);
        }
        std::string iri(line);
        if (!is_absolute_iri(iri)) {
            throw ParseError("not an absolute IRI: '" + iri + "'", line_no, first + 1);
        }
        if (!seen.insert(iri).second) {
            throw ParseError("duplicate population entry " + iri, line_no, first + 1);
        }
        members.push_back(std::move(iri));
    }
    if (members.empty()) {
        throw ValidationError("empty population");
    }
    return Population(std::move(members));
}

}  // namespace skossim
