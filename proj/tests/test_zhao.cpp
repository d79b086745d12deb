#include "oracles.hpp"

#include <entrobound/corpus.hpp>
#include <entrobound/indep_sets.hpp>

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace entrobound;

TEST(Transversal, MatchesFirstSubsetScan)
{
    std::mt19937_64 rng(17);
    for (int t = 0; t < 3000; ++t) {
        const int n = 2 + static_cast<int>(rng() % 7);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 4 == 0)
                    edges.emplace_back(u, v);
        EXPECT_EQ(first_edge_transversal(n, edges), oracle::first_transversal_scan(n, edges));
    }
}

TEST(Transversal, OddCycleHasNone)
{
    EXPECT_FALSE(first_edge_transversal(3, {{0, 1}, {1, 2}, {0, 2}}).has_value());
    EXPECT_EQ(first_edge_transversal(4, {}), VertexMask{0});
}

TEST(ZhaoInject, NoConflicts)
{
    auto g = cycle_graph(5);
    auto w = zhao_inject(g, 0b00101, 0);
    EXPECT_EQ(w.swap_set, 0u);
    EXPECT_EQ(w.image.left, 0b00101u);
    EXPECT_EQ(w.image.right, 0u);
    auto back = zhao_invert(g, w.image);
    EXPECT_EQ(back, (std::pair<VertexMask, VertexMask>{0b00101, 0}));
}

TEST(ZhaoInject, SingleEdge)
{
    Graph k2(2, {{0, 1}});
    auto w = zhao_inject(k2, 0b01, 0b10);
    ASSERT_EQ(w.conflict_edges.size(), 1u);
    EXPECT_EQ(w.swap_set, 0b01u);
    // (0,0) moves to (0,1): both copies land on side 1.
    EXPECT_EQ(w.image.left, 0u);
    EXPECT_EQ(w.image.right, 0b11u);
    EXPECT_TRUE(is_independent_in_cover(k2, w.image));
    EXPECT_EQ(zhao_invert(k2, w.image), (std::pair<VertexMask, VertexMask>{0b01, 0b10}));
}

TEST(ZhaoInject, RejectsDependentInput)
{
    Graph k2(2, {{0, 1}});
    try {
        zhao_inject(k2, 0b11, 0);
        FAIL();
    }
    catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Precondition);
    }
}

TEST(ZhaoInject, WitnessInvariants)
{
    std::mt19937_64 rng(2);
    for (int t = 0; t < 60; ++t) {
        auto g = random_graph(7, 0.35, rng());
        auto sets = independent_sets(g);
        for (int s = 0; s < 40; ++s) {
            auto s0 = sets[rng() % sets.size()], s1 = sets[rng() % sets.size()];
            auto w = zhao_inject(g, s0, s1);
            for (auto [i, j] : w.conflict_edges) {
                EXPECT_TRUE((s0 >> i) & 1U);
                EXPECT_TRUE((s1 >> j) & 1U);
                EXPECT_EQ(((w.swap_set >> i) ^ (w.swap_set >> j)) & 1U, 1U);
            }
            EXPECT_TRUE(is_independent_in_cover(g, w.image));
        }
    }
}

TEST(ZhaoAudit, ExhaustiveUpToFiveVertices)
{
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : all_graphs(n)) {
            auto a = zhao_audit(g);
            ASSERT_TRUE(a.holds());
            EXPECT_EQ(a.independent_sets, oracle::count_independent_sets(g));
        }
}

TEST(ZhaoAudit, ImagesStayInsideDoubleCover)
{
    auto g = cycle_graph(5);
    auto sets = independent_sets(g);
    std::set<std::pair<VertexMask, VertexMask>> images;
    for (auto s0 : sets)
        for (auto s1 : sets) {
            auto w = zhao_inject(g, s0, s1);
            images.emplace(w.image.left, w.image.right);
        }
    EXPECT_EQ(images.size(), sets.size() * sets.size());
    EXPECT_LE(images.size(), oracle::count_double_cover(g));
}

TEST(ZhaoInvert, HandBuiltImageOutsideRange)
{
    // For C_5, I(G)^2 = 121 < 123 = I(G x K_2), so two independent sets of the
    // cover are missing from the range.
    auto g = cycle_graph(5);
    auto sets = independent_sets(g);
    std::set<std::pair<VertexMask, VertexMask>> images;
    for (auto s0 : sets)
        for (auto s1 : sets) {
            auto w = zhao_inject(g, s0, s1);
            images.emplace(w.image.left, w.image.right);
        }
    int outside = 0;
    for (VertexMask l = 0; l < 32; ++l)
        for (VertexMask r = 0; r < 32; ++r) {
            CoverSet s{l, r};
            if (!is_independent_in_cover(g, s) || images.count({l, r}))
                continue;
            ++outside;
            try {
                zhao_invert(g, s);
                ADD_FAILURE() << "inverted an image outside the range";
            }
            catch (const Error& e) {
                EXPECT_EQ(e.kind(), ErrorKind::NotInRange);
            }
        }
    EXPECT_EQ(static_cast<std::uint64_t>(outside), oracle::count_double_cover(g) - images.size());
    EXPECT_GT(outside, 0);
}
