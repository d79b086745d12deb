#include "oracles.hpp"

#include <entrobound/corpus.hpp>
#include <entrobound/indep_sets.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace entrobound;

namespace {

std::uint64_t as_u64(const BigInt& x) { return x.convert_to<std::uint64_t>(); }

BipartiteGraph cycle_as_bipartite(int half)
{
    // left i ~ right i and right i-1
    std::vector<Edge> edges;
    for (int i = 0; i < half; ++i) {
        edges.emplace_back(i, i);
        edges.emplace_back(i, (i + half - 1) % half);
    }
    return BipartiteGraph(half, half, edges);
}

} // namespace

TEST(Count, Examples)
{
    EXPECT_EQ(as_u64(count_independent_sets_bruteforce(Graph::edgeless(5)).value), 32u);
    EXPECT_EQ(as_u64(count_independent_sets_bruteforce(complete_graph(3)).value), 4u);
    EXPECT_EQ(as_u64(count_independent_sets_bruteforce(cycle_graph(6)).value), 18u);
    EXPECT_EQ(as_u64(count_independent_sets_bruteforce(cycle_graph(8)).value), 47u);
    EXPECT_EQ(as_u64(count_independent_sets_bipartite(complete_bipartite(2, 2)).value), 7u);
    EXPECT_EQ(as_u64(count_independent_sets_bipartite(complete_bipartite(1, 3)).value), 9u);
    EXPECT_EQ(as_u64(count_independent_sets_bipartite(cycle_as_bipartite(4)).value), 47u);
}

TEST(Count, LogValue)
{
    auto c = count_independent_sets_bipartite(complete_bipartite(2, 2));
    EXPECT_NEAR(c.log_value, std::log(7.0), 1e-12);
    auto big = count_independent_sets_bipartite(BipartiteGraph(30, 30, {}));
    EXPECT_EQ(big.value, pow2(60));
    EXPECT_NEAR(big.log_value, 60 * std::log(2.0), 1e-9);
}

TEST(Count, Multiplicative)
{
    auto a = complete_bipartite(2, 3), b = complete_bipartite(1, 2);
    auto u = disjoint_union({a, b});
    EXPECT_EQ(count_independent_sets_bipartite(u).value,
              count_independent_sets_bipartite(a).value * count_independent_sets_bipartite(b).value);
}

TEST(Count, Guards)
{
    try {
        count_independent_sets_bruteforce(Graph::edgeless(31));
        FAIL();
    }
    catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
    }
    EXPECT_THROW(count_independent_sets_bipartite(BipartiteGraph(31, 31, {})), Error);
}

TEST(Count, BruteForceMatchesMeetInTheMiddleAndOracle)
{
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        const int m = 1 + static_cast<int>(seed % 10), n = 1 + static_cast<int>((seed * 7) % 10);
        auto g = random_bipartite(m, n, 0.15 + 0.1 * static_cast<double>(seed % 6), seed);
        auto mitm = count_independent_sets_bipartite(g).value;
        EXPECT_EQ(mitm, count_independent_sets_bruteforce(g.as_graph()).value);
        if (m + n <= 14) {
            EXPECT_EQ(as_u64(mitm), oracle::count_independent_sets(g.as_graph()));
        }
    }
    for (const auto& g : connected_bipartite_graphs(6))
        EXPECT_EQ(count_independent_sets_bipartite(g).value, count_independent_sets_bruteforce(g.as_graph()).value);
}

TEST(Count, ListedSetsAreIndependent)
{
    auto g = random_graph(9, 0.3, 4);
    auto sets = independent_sets(g);
    EXPECT_EQ(sets.size(), oracle::count_independent_sets(g));
    for (auto s : sets)
        EXPECT_TRUE(is_independent(g, s));
}

TEST(Kahn, Examples)
{
    EXPECT_NEAR(kahn_bound(complete_bipartite(2, 2)), std::log(7.0), 1e-12);
    auto two = disjoint_union({complete_bipartite(2, 2), complete_bipartite(2, 2)});
    EXPECT_NEAR(kahn_bound(two), std::log(49.0), 1e-12);
    auto c8 = cycle_as_bipartite(4);
    EXPECT_NEAR(kahn_bound(c8), std::log(49.0), 1e-12);
    EXPECT_GE(kahn_bound(c8), count_independent_sets_bipartite(c8).log_value);
    try {
        kahn_bound(complete_bipartite(1, 3));
        FAIL();
    }
    catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotRegular);
    }
}

TEST(Sah, Examples)
{
    EXPECT_NEAR(sah_bound(complete_bipartite(2, 2)), std::log(7.0), 1e-12);
    EXPECT_NEAR(sah_bound(complete_bipartite(1, 3)), std::log(9.0), 1e-12);
    EXPECT_NEAR(sah_bound(complete_graph(3)), 0.75 * std::log(7.0), 1e-12);
    EXPECT_GE(sah_bound(complete_graph(3)), std::log(4.0));
    try {
        sah_bound(BipartiteGraph(2, 2, {{0, 0}}));
        FAIL();
    }
    catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Precondition);
    }
}

TEST(Sah, EdgeTermIsStable)
{
    EXPECT_NEAR(detail::sah_edge_term(2, 2), std::log(7.0) / 4, 1e-15);
    // ln(2^a + 2^b - 1)/(ab) ~ ln2/min(a,b) for large degrees
    EXPECT_NEAR(detail::sah_edge_term(2000, 3000), std::log(2.0) * 3000 / (2000.0 * 3000), 1e-12);
    EXPECT_TRUE(std::isfinite(detail::sah_edge_term(5000, 5000)));
}

TEST(Sah, ValidOnRandomGraphsAndTightOnCompleteBipartite)
{
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        auto g = random_bipartite(2 + static_cast<int>(seed % 6), 2 + static_cast<int>(seed % 5), 0.5, seed);
        if (g.has_isolated_vertex())
            continue;
        EXPECT_TRUE(holds_with_slack(count_independent_sets_bipartite(g).log_value, sah_bound(g)));
    }
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
            auto g = complete_bipartite(a, b);
            EXPECT_TRUE(close_with_slack(sah_bound(g), count_independent_sets_bipartite(g).log_value));
        }
}

TEST(Sah, CoverChainEquality)
{
    EXPECT_NEAR(sah_bound_general_via_cover(complete_graph(3)), sah_bound(complete_graph(3)), 1e-12);
    EXPECT_NEAR(sah_bound_general_via_cover(complete_bipartite(2, 2).as_graph()), std::log(7.0), 1e-12);
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        auto g = attach_isolated_vertices(random_graph(8, 0.4, seed), seed);
        bool isolated = false;
        for (int v = 0; v < g.vertex_count(); ++v)
            isolated = isolated || g.degree(v) == 0;
        if (isolated)
            continue;
        EXPECT_NEAR(sah_bound_general_via_cover(g), sah_bound(g), 1e-9);
    }
}

TEST(ZhaoCheck, Examples)
{
    auto k3 = zhao_check(complete_graph(3));
    EXPECT_EQ(as_u64(k3.lhs), 16u);
    EXPECT_EQ(as_u64(k3.rhs), 18u);
    EXPECT_TRUE(k3.holds);
    EXPECT_FALSE(k3.equal);

    auto e = zhao_check(Graph::edgeless(4));
    EXPECT_EQ(as_u64(e.lhs), 256u);
    EXPECT_TRUE(e.equal);

    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto b = random_bipartite(3, 4, 0.5, seed).as_graph();
        EXPECT_TRUE(zhao_check(b).equal);
    }
}

TEST(ZhaoCheck, MatchesExplicitDoubleCoverOracle)
{
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        auto g = random_graph(6, 0.45, seed);
        auto r = zhao_check(g);
        EXPECT_EQ(as_u64(r.rhs), oracle::count_double_cover(g));
        EXPECT_TRUE(r.holds);
    }
}
