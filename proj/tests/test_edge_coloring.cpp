#include "oracles.hpp"

#include <entrobound/edge_coloring.hpp>
#include <entrobound/entropy.hpp>
#include <entrobound/io.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

using namespace entrobound;

namespace {

EdgeColoring all_distinct(const BipartiteGraph& g)
{
    std::vector<int> c(g.edge_count());
    std::iota(c.begin(), c.end(), 0);
    return EdgeColoring(c, static_cast<int>(g.edge_count()));
}

// The two perfect matchings of K_{2,2}: {(0,0),(1,1)} and {(0,1),(1,0)}.
EdgeColoring matchings(const BipartiteGraph& k22)
{
    return EdgeColoring::from_triples(k22, {{0, 0, 0}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
}

} // namespace

TEST(Proper, Examples)
{
    auto k22 = complete_bipartite(2, 2);
    EXPECT_TRUE(verify_proper(k22, all_distinct(k22)));
    EXPECT_FALSE(verify_proper(k22, EdgeColoring({0, 0, 0, 0}, 1)));
    EXPECT_TRUE(verify_proper(k22, matchings(k22)));
    try {
        verify_proper(k22, EdgeColoring({0, 1, 2}, 3));
        FAIL();
    }
    catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
    }
}

TEST(Richness, ColoringExamples)
{
    for (int d = 1; d <= 3; ++d) {
        auto g = complete_bipartite(d, d);
        EXPECT_EQ(coloring_richness(g, all_distinct(g)).m, 1);
    }
    auto k22 = complete_bipartite(2, 2);
    EXPECT_EQ(coloring_richness(k22, matchings(k22)).m, 2);
    EXPECT_EQ(coloring_richness(complete_bipartite(1, 1), EdgeColoring({0}, 1)).m, 1);
}

TEST(RichBound, Examples)
{
    EXPECT_EQ(rich_coloring_lower_bound(complete_bipartite(2, 2), 1).colors, 4);
    auto k33 = rich_coloring_lower_bound(complete_bipartite(3, 3), 2);
    EXPECT_EQ(k33.colors, 5);
    EXPECT_DOUBLE_EQ(k33.raw, 4.5);
    EXPECT_EQ(rich_coloring_lower_bound(complete_bipartite(3, 2), 6).colors, 1);
    EXPECT_EQ(rich_coloring_lower_bound(BipartiteGraph(2, 2, {{0, 0}, {1, 1}, {0, 1}}), 1).colors, 1);
    EXPECT_THROW(rich_coloring_lower_bound(BipartiteGraph(2, 2, {{0, 0}}), 1), Error);
}

TEST(Konig, Examples)
{
    for (int d = 1; d <= 4; ++d) {
        auto g = complete_bipartite(d, d);
        auto c = proper_edge_color_bipartite(g);
        EXPECT_EQ(c.color_count(), d);
        EXPECT_TRUE(verify_proper(g, c));
    }
    BipartiteGraph path(2, 2, {{0, 0}, {1, 0}, {1, 1}});
    EXPECT_EQ(proper_edge_color_bipartite(path).color_count(), 2);
}

TEST(Konig, RandomGraphsUseExactlyMaxDegree)
{
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        auto g = random_bipartite(1 + static_cast<int>(seed % 9), 1 + static_cast<int>(seed % 7), 0.45, seed);
        auto c = proper_edge_color_bipartite(g);
        EXPECT_TRUE(verify_proper(g, c)) << seed;
        EXPECT_EQ(c.color_count(), g.max_degree()) << seed;
        EXPECT_EQ(c.used_colors(), g.max_degree()) << seed;
    }
}

TEST(MinColorsRich, Examples)
{
    auto k22 = complete_bipartite(2, 2);
    auto r1 = min_colors_rich(k22, 1, 16);
    ASSERT_TRUE(r1.colors.has_value());
    EXPECT_EQ(*r1.colors, 4);
    ASSERT_TRUE(r1.witness.has_value());
    EXPECT_TRUE(verify_proper(k22, *r1.witness));
    EXPECT_EQ(coloring_richness(k22, *r1.witness).m, 1);

    EXPECT_EQ(min_colors_rich(k22, 2, 16).colors, 2);
    EXPECT_EQ(min_colors_rich(complete_bipartite(3, 3), 9, 16).colors, 3);
}

TEST(MinColorsRich, BudgetAndGuard)
{
    auto r = min_colors_rich(complete_bipartite(2, 2), 1, 3);
    EXPECT_FALSE(r.colors.has_value());
    EXPECT_EQ(r.bound.colors, 4);
    try {
        min_colors_rich(complete_bipartite(4, 5), 1, 20);
        FAIL();
    }
    catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
    }
}

TEST(MinColorsRich, ResultsRespectBoundAndStrictness)
{
    for (int d = 2; d <= 3; ++d) {
        auto g = complete_bipartite(d, d);
        for (int m = 1; m < d; ++m) {
            auto r = min_colors_rich(g, m, 16);
            ASSERT_TRUE(r.colors.has_value());
            EXPECT_GT(*r.colors, d);
            EXPECT_GE(*r.colors, r.bound.colors);
        }
    }
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        auto g = random_bipartite(3, 3, 0.6, seed);
        if (g.has_isolated_vertex())
            continue;
        for (int m = 1; m <= 2; ++m) {
            auto r = min_colors_rich(g, m, 16);
            ASSERT_TRUE(r.colors.has_value());
            EXPECT_TRUE(verify_proper(g, *r.witness));
            EXPECT_LE(coloring_richness(g, *r.witness).m, m);
            EXPECT_GE(*r.colors, r.bound.colors);
            EXPECT_GE(*r.colors, g.max_degree());
        }
    }
}

TEST(ColoringPmf, Examples)
{
    const double ln2 = std::log(2.0);
    auto k22 = complete_bipartite(2, 2);
    auto j = coloring_to_joint_pmf(k22, all_distinct(k22));
    auto r = conditional_inequality_check(j);
    EXPECT_NEAR(r.h_a, 2 * ln2, 1e-12);
    EXPECT_NEAR(r.h_a_given_x, ln2, 1e-12);
    EXPECT_NEAR(r.h_a_given_y, ln2, 1e-12);
    EXPECT_EQ(r.m, 1);
    EXPECT_NEAR(r.lhs, r.rhs, 1e-12);

    auto single = coloring_to_joint_pmf(complete_bipartite(1, 1), EdgeColoring({0}, 1));
    EXPECT_EQ(entropy(single), 0.0);

    auto mj = coloring_to_joint_pmf(k22, matchings(k22));
    auto mr = conditional_inequality_check(mj);
    EXPECT_NEAR(mr.h_a, ln2, 1e-12);
    EXPECT_NEAR(mr.lhs, 2 * ln2, 1e-12);
    EXPECT_EQ(mr.m, 2);
    EXPECT_NEAR(mr.lhs, mr.rhs, 1e-12);
}

TEST(ColoringPmf, RichnessDominatesSupportRichness)
{
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        auto g = random_bipartite(4, 4, 0.5, seed);
        if (g.edge_count() == 0)
            continue;
        auto c = proper_edge_color_bipartite(g);
        auto j = coloring_to_joint_pmf(g, c);
        auto r = conditional_inequality_check(j);
        EXPECT_TRUE(r.holds);
        EXPECT_LE(r.m, coloring_richness(g, c).m);
        EXPECT_EQ(r.m, oracle::richness(j, 0, 1, 2));
    }
}

TEST(ColoringIo, RoundTrip)
{
    auto g = complete_bipartite(3, 3);
    auto c = proper_edge_color_bipartite(g);
    auto back = parse_coloring(g, serialize_coloring(g, c));
    EXPECT_EQ(back.colors(), c.colors());
    EXPECT_THROW(parse_coloring(g, "0 0 1\n"), Error);
}
