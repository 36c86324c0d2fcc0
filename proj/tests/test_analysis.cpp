#include <gtest/gtest.h>

#include <random>

#include "fixture.hpp"
#include "skossim/analysis.hpp"
#include "skossim/error.hpp"

namespace skossim {
namespace {

using testing::habitat;

SimilarityMatrix context1_habitats() {
    TripleStore store = testing::table1_store();
    return similarity_matrix(store, load_context(testing::read_data("context1.ctx")),
                             parse_population(testing::read_data("habitats.txt")));
}

SimilarityMatrix context2_habitats() {
    TripleStore store = testing::table1_taxonomy();
    return similarity_matrix(store, load_context(testing::read_data("context2.ctx")),
                             parse_population(testing::read_data("habitats.txt")));
}

TEST(ClassifyPair, Examples) {
    EXPECT_EQ(classify_pair(Rational::one(), Rational::one()), ContainmentRelation::Equivalent);
    EXPECT_EQ(classify_pair(Rational::one(), Rational(1, 2)), ContainmentRelation::FirstContainedInSecond);
    EXPECT_EQ(classify_pair(Rational(1, 2), Rational::one()), ContainmentRelation::SecondContainedInFirst);
    EXPECT_EQ(classify_pair(Rational::zero(), Rational::zero()), ContainmentRelation::Disjoint);
    EXPECT_EQ(classify_pair(Rational(3, 11), Rational(1, 6)), ContainmentRelation::Overlap);
    // Containment beats zero: (1, 0) arises for an empty first set under policy one.
    EXPECT_EQ(classify_pair(Rational::one(), Rational::zero()), ContainmentRelation::FirstContainedInSecond);
    EXPECT_EQ(classify_pair(Rational::zero(), Rational(1, 3)), ContainmentRelation::Overlap);
}

// Exactly one relation fires and it agrees with a direct reading of the rules.
TEST(ClassifyPair, ExhaustiveOverSmallRationals) {
    std::vector<Rational> values;
    for (std::uint64_t d = 1; d <= 6; ++d) {
        for (std::uint64_t n = 0; n <= d; ++n) {
            values.emplace_back(n, d);
        }
    }
    for (const auto& a : values) {
        for (const auto& b : values) {
            const bool a1 = a == Rational::one(), b1 = b == Rational::one();
            const bool a0 = a == Rational::zero(), b0 = b == Rational::zero();
            int fired = (a1 && b1) + (a1 && !b1) + (!a1 && b1) + (!a1 && !b1 && a0 && b0) +
                        (!a1 && !b1 && !(a0 && b0));
            ASSERT_EQ(fired, 1);
            ContainmentRelation expected = a1 && b1   ? ContainmentRelation::Equivalent
                                           : a1       ? ContainmentRelation::FirstContainedInSecond
                                           : b1       ? ContainmentRelation::SecondContainedInFirst
                                           : a0 && b0 ? ContainmentRelation::Disjoint
                                                      : ContainmentRelation::Overlap;
            ASSERT_EQ(classify_pair(a, b), expected);
        }
    }
}

TEST(ContainmentReport, ContextOneFixture) {
    auto m = context1_habitats();
    auto report = containment_report(m);
    EXPECT_EQ(report.size(), 11u * 10u / 2u);
    auto find = [&](const std::string& x, const std::string& y) {
        for (const auto& e : report) {
            if (e.first == x && e.second == y) {
                return e.relation;
            }
        }
        ADD_FAILURE() << "pair missing " << x << " " << y;
        return ContainmentRelation::Disjoint;
    };
    EXPECT_EQ(find(habitat("B2.3"), habitat("B2.32")), ContainmentRelation::Equivalent);
    EXPECT_EQ(find(habitat("B2.1"), habitat("B2.31")), ContainmentRelation::Overlap);
    EXPECT_EQ(find(habitat("B2.3"), habitat("B2.31")), ContainmentRelation::Overlap);
    // B2 lists no species: vacuously contained in every habitat.
    EXPECT_EQ(find(habitat("B2"), habitat("B2.1")), ContainmentRelation::FirstContainedInSecond);
    EXPECT_EQ(find(habitat("B2.1"), habitat("B2.34")), ContainmentRelation::Disjoint);
}

TEST(ContainmentReport, ContextTwoRootContainedEverywhere) {
    auto m = context2_habitats();
    for (const auto& e : containment_report(m)) {
        if (e.first == habitat("B2")) {
            EXPECT_EQ(e.relation, ContainmentRelation::FirstContainedInSecond) << e.second;
        }
    }
}

TEST(ContainmentReport, SingleResourceIsEmpty) {
    TripleStore store = testing::table1_store();
    std::vector<std::string> pop{habitat("B2.1")};
    auto m = similarity_matrix(store, load_context(testing::read_data("context1.ctx")), pop);
    EXPECT_TRUE(containment_report(m).empty());
}

TEST(RankBySimilarity, ContextTwoFromQuery) {
    auto m = context2_habitats();
    auto ranked = rank_by_similarity(m, habitat("B2.11"), RankDirection::FromQuery);
    std::vector<RankEntry> expected{
        {habitat("B2.1"), Rational(2, 3)},  {habitat("B2.12"), Rational(2, 3)}, {habitat("B2.13"), Rational(2, 3)},
        {habitat("B2.14"), Rational(2, 3)}, {habitat("B2"), Rational(1, 3)},    {habitat("B2.3"), Rational(1, 3)},
        {habitat("B2.31"), Rational(1, 3)}, {habitat("B2.32"), Rational(1, 3)}, {habitat("B2.33"), Rational(1, 3)},
        {habitat("B2.34"), Rational(1, 3)},
    };
    EXPECT_EQ(ranked, expected);
}

TEST(RankBySimilarity, ContextTwoToQuery) {
    auto m = context2_habitats();
    auto ranked = rank_by_similarity(m, habitat("B2.1"), RankDirection::ToQuery);
    ASSERT_EQ(ranked.size(), 10u);
    // Only B2 is fully covered by B2.1's ancestors.
    EXPECT_EQ(ranked[0], (RankEntry{habitat("B2"), Rational::one()}));
    EXPECT_EQ(ranked[1].value, Rational(2, 3));
}

TEST(RankBySimilarity, AllZeroRowTiesInIriOrder) {
    TripleStore store;
    for (const char* s : {"urn:z", "urn:b", "urn:q", "urn:a"}) {
        store.insert(Triple{Term::iri(s), Term::iri("urn:p"), Term::iri(std::string(s) + ":own")});
    }
    std::vector<std::string> pop{"urn:z", "urn:b", "urn:q", "urn:a"};
    auto m = similarity_matrix(store, load_context("[<urn:C>]->{ },{(<urn:p>, Inter)}"), pop);
    auto ranked = rank_by_similarity(m, "urn:q", RankDirection::FromQuery);
    ASSERT_EQ(ranked.size(), 3u);
    EXPECT_EQ(ranked[0].resource, "urn:a");
    EXPECT_EQ(ranked[1].resource, "urn:b");
    EXPECT_EQ(ranked[2].resource, "urn:z");
}

TEST(RankBySimilarity, QueryNotInPopulation) {
    auto m = context1_habitats();
    EXPECT_THROW(rank_by_similarity(m, "urn:eunis:habitat:A1", RankDirection::FromQuery), ValidationError);
}

TEST(ParsePopulation, FixtureHabitats) {
    auto pop = parse_population(testing::read_data("habitats.txt"));
    ASSERT_EQ(pop.size(), 11u);
    EXPECT_EQ(pop.members().front(), habitat("B2"));
    EXPECT_EQ(pop.members().back(), habitat("B2.34"));
}

TEST(ParsePopulation, Errors) {
    try {
        parse_population("");
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_EQ(std::string(e.what()), "empty population");
    }
    EXPECT_THROW(parse_population("# nothing\n\n"), ValidationError);
    try {
        parse_population("urn:a\nurn:b\n  urn:a\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
    EXPECT_THROW(parse_population("relative/path\n"), ParseError);
    EXPECT_THROW(parse_population("_:blank\n"), ParseError);
}

TEST(ParsePopulation, AcceptsBracketsAndComments) {
    auto pop = parse_population("# habitats\n<urn:a>\n\n  urn:b  \r\n");
    EXPECT_EQ(pop.members(), (std::vector<std::string>{"urn:a", "urn:b"}));
}

}  // namespace
}  // namespace skossim
