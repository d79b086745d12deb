#include "oracles.hpp"

#include <entrobound/corpus.hpp>
#include <entrobound/walks.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace entrobound;

namespace {

std::uint64_t as_u64(const BigInt& x) { return x.convert_to<std::uint64_t>(); }

} // namespace

TEST(Census, Examples)
{
    auto k22 = complete_bipartite(2, 2);
    auto c1 = walk_census(k22, 1);
    EXPECT_EQ(as_u64(c1.directed), 8u);
    EXPECT_EQ(as_u64(c1.undirected), 4u);
    auto c3 = walk_census(k22, 3);
    EXPECT_EQ(as_u64(c3.undirected), 16u);
    EXPECT_EQ(as_u64(c3.directed), 32u);
    auto e2 = walk_census(complete_bipartite(1, 1), 2);
    EXPECT_EQ(as_u64(e2.directed), 2u);
    EXPECT_EQ(as_u64(e2.palindromes), 2u);
    EXPECT_EQ(as_u64(e2.undirected), 2u);
    try {
        walk_census(k22, 0);
        FAIL();
    }
    catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidParameter);
    }
}

TEST(Census, MatchesExhaustiveEnumeration)
{
    for (const auto& g : connected_bipartite_graphs(8))
        for (int k = 1; k <= 4; ++k) {
            auto c = walk_census(g, k);
            auto o = oracle::walk_census(g, k);
            ASSERT_EQ(as_u64(c.directed), o.directed);
            ASSERT_EQ(as_u64(c.undirected), o.undirected);
            EXPECT_GE(c.directed, c.undirected);
        }
}

TEST(Census, IsolatedVerticesAddNothing)
{
    auto g = random_bipartite(3, 4, 0.6, 5);
    BipartiteGraph h(g.left_count() + 2, g.right_count() + 1, g.edges());
    for (int k = 1; k <= 5; ++k)
        EXPECT_EQ(walk_census(g, k).directed, walk_census(h, k).directed);
}

TEST(WalkBounds, Examples)
{
    auto k22 = complete_bipartite(2, 2);
    auto b3 = walk_bounds(k22, 3);
    EXPECT_NEAR(b3.lb1, std::log(16.0), 1e-12);
    EXPECT_NEAR(b3.lb2, std::log(16.0), 1e-12);

    auto star = walk_bounds(complete_bipartite(1, 3), 3);
    EXPECT_NEAR(star.lb1, std::log(9.0), 1e-12);
    EXPECT_NEAR(star.lb2, std::log(9.0), 1e-12);
    EXPECT_GE(log_of(walk_census(complete_bipartite(1, 3), 3).undirected), star.lb1 - 1e-12);

    auto b2 = walk_bounds(k22, 2);
    EXPECT_NEAR(b2.lb1, std::log(8.0), 1e-12);
    EXPECT_NEAR(b2.lb2, std::log(8.0), 1e-12);

    EXPECT_THROW(walk_bounds(BipartiteGraph(2, 2, {}), 1), Error);
}

TEST(WalkBounds, ValidAgainstDirectedCensus)
{
    for (const auto& g : connected_bipartite_graphs(7))
        for (int k = 1; k <= 6; ++k) {
            auto b = walk_bounds(g, k);
            EXPECT_TRUE(holds_with_slack(b.lb1, log_of(walk_census(g, k).directed)));
            EXPECT_TRUE(holds_with_slack(b.lb2, b.lb1));
        }
}

TEST(WalkBounds, RegularOddEquality)
{
    for (int d = 1; d <= 3; ++d)
        for (int k = 1; k <= 5; k += 2) {
            auto g = complete_bipartite(d, d);
            auto c = walk_census(g, k);
            BigInt expected = BigInt(d * d);
            for (int i = 0; i < (k - 1) / 2; ++i)
                expected *= d * d;
            EXPECT_EQ(c.undirected, expected);
            auto b = walk_bounds(g, k);
            EXPECT_TRUE(close_with_slack(b.lb1, log_of(expected), 1e-9));
            EXPECT_TRUE(close_with_slack(b.lb2, log_of(expected), 1e-9));
        }
}

TEST(ChainPmf, Examples)
{
    auto e = walk_chain_pmf(complete_bipartite(2, 3), 1);
    EXPECT_NEAR(entropy(e.pmf), std::log(6.0), 1e-12);

    auto k22 = walk_chain_pmf(complete_bipartite(2, 2), 3);
    EXPECT_NEAR(entropy(k22.pmf), std::log(16.0), 1e-12);
    EXPECT_EQ(k22.pmf.support_size(), 16u);

    auto star = walk_chain_pmf(complete_bipartite(1, 3), 3);
    EXPECT_NEAR(entropy(star.pmf), std::log(9.0), 1e-12);
    EXPECT_EQ(star.pmf.support_size(), 9u);

    auto single = walk_chain_pmf(complete_bipartite(1, 1), 5);
    EXPECT_EQ(single.pmf.support_size(), 1u);
    EXPECT_EQ(entropy(single.pmf), 0.0);
}

TEST(ChainPmf, Errors)
{
    auto k22 = complete_bipartite(2, 2);
    try {
        walk_chain_pmf(k22, 2);
        FAIL();
    }
    catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Unsupported);
    }
    EXPECT_THROW(walk_chain_pmf(k22, 9), Error);
    EXPECT_THROW(walk_chain_pmf(complete_bipartite(4, 4), 3), Error);
}

TEST(ChainPmf, StepwiseConditionalEntropies)
{
    // Centre edge contributes ln|E|; each outward step from a left end adds
    // sum_u P(u) ln d(u) = ln|E| - H(P), from a right end ln|E| - H(Q).
    auto g = BipartiteGraph(3, 2, {{0, 0}, {0, 1}, {1, 0}, {2, 1}});
    auto chain = walk_chain_pmf(g, 3);
    auto pmfs = degree_pmfs(g);
    const double le = std::log(4.0);
    const double step_left = le - entropy(pmfs.left), step_right = le - entropy(pmfs.right);
    EXPECT_NEAR(marginal_entropy(chain.pmf, {1}), le, 1e-12);
    const double h12 = marginal_entropy(chain.pmf, {0, 1}) - marginal_entropy(chain.pmf, {1});
    const double h32 = marginal_entropy(chain.pmf, {1, 2}) - marginal_entropy(chain.pmf, {1});
    EXPECT_NEAR(h12, step_left, 1e-12);
    EXPECT_NEAR(h32, step_right, 1e-12);
    EXPECT_NEAR(entropy(chain.pmf), le + step_left + step_right, 1e-12);
}

TEST(ChainPmf, OutwardStepsAlternateSides)
{
    auto g = BipartiteGraph(3, 2, {{0, 0}, {0, 1}, {1, 0}, {2, 1}});
    auto chain = walk_chain_pmf(g, 5);
    auto pmfs = degree_pmfs(g);
    const double le = std::log(4.0);
    const double from_left = le - entropy(pmfs.left), from_right = le - entropy(pmfs.right);
    ASSERT_GT(std::abs(from_left - from_right), 1e-3);
    auto step = [&](std::size_t next, std::size_t prev) {
        return marginal_entropy(chain.pmf, {prev, next}) - marginal_entropy(chain.pmf, {prev});
    };
    // centre is coordinate 2; its left end faces coordinate 1
    EXPECT_NEAR(step(1, 2), from_left, 1e-12);
    EXPECT_NEAR(step(0, 1), from_right, 1e-12);
    EXPECT_NEAR(step(3, 2), from_right, 1e-12);
    EXPECT_NEAR(step(4, 3), from_left, 1e-12);
    EXPECT_NEAR(entropy(chain.pmf), 5 * le - 2 * (entropy(pmfs.left) + entropy(pmfs.right)), 1e-12);
}

TEST(ChainAudit, CorpusAgreement)
{
    for (const auto& g : connected_bipartite_graphs(8))
        for (int k = 1; k <= 5; k += 2) {
            if (g.edge_count() > kChainMaxEdges)
                continue;
            auto a = chain_entropy_audit(g, k);
            ASSERT_TRUE(a.holds());
            EXPECT_NEAR(a.total_mass, 1.0, 1e-12);
            EXPECT_TRUE(a.support_equals_undirected);
        }
}
