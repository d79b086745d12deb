#pragma once

// Deterministic input corpora: small-graph enumerations and seeded random
// distributions and cover families.

#include <entrobound/entropy.hpp>
#include <entrobound/error.hpp>
#include <entrobound/graph.hpp>
#include <entrobound/pmf.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <tuple>
#include <vector>

namespace entrobound {

/// Graph on n vertices whose edges are the set bits of `mask` over the
/// pairs (0,1), (0,2), ..., (n-2,n-1) in that order.
inline Graph graph_from_pair_mask(int n, std::uint64_t mask)
{
    std::vector<Edge> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1U)
                edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

inline int pair_count(int n) { return n * (n - 1) / 2; }

/// Every labelled graph on n vertices (2^(n(n-1)/2) of them).
inline std::vector<Graph> all_graphs(int n)
{
    if (n < 0 || pair_count(n) > 24)
        fail(ErrorKind::TooLarge, "exhaustive graph listing limited to n <= 7");
    std::vector<Graph> out;
    const std::uint64_t end = std::uint64_t{1} << pair_count(n);
    out.reserve(end);
    for (std::uint64_t m = 0; m < end; ++m)
        out.push_back(graph_from_pair_mask(n, m));
    return out;
}

namespace detail {

/// Canonical form of a bipartite graph up to relabelling within each side:
/// permute the smaller side, sort the neighbourhood masks of the other side,
/// keep the least result.
struct BipartiteKey {
    int left = 0;
    int right = 0;
    bool rows = false; // masks belong to left vertices (over right indices)
    std::vector<std::uint32_t> masks;

    friend auto operator<=>(const BipartiteKey&, const BipartiteKey&) = default;
};

inline BipartiteKey canonical_key(const BipartiteGraph& g)
{
    BipartiteKey best;
    best.left = g.left_count();
    best.right = g.right_count();
    best.rows = g.left_count() > g.right_count();
    const int permuted = best.rows ? g.right_count() : g.left_count();
    const int sorted = best.rows ? g.left_count() : g.right_count();
    if (permuted > 8)
        fail(ErrorKind::TooLarge, "canonical form limited to a smaller side of 8");

    std::vector<int> perm(static_cast<std::size_t>(permuted));
    std::iota(perm.begin(), perm.end(), 0);
    bool first = true;
    std::vector<std::uint32_t> masks(static_cast<std::size_t>(sorted));
    do {
        std::fill(masks.begin(), masks.end(), 0);
        for (auto [u, v] : g.edges()) {
            if (best.rows)
                masks[static_cast<std::size_t>(u)] |= std::uint32_t{1} << perm[static_cast<std::size_t>(v)];
            else
                masks[static_cast<std::size_t>(v)] |= std::uint32_t{1} << perm[static_cast<std::size_t>(u)];
        }
        std::sort(masks.begin(), masks.end());
        if (first || masks < best.masks) {
            best.masks = masks;
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline BipartiteGraph from_key(const BipartiteKey& key)
{
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < key.masks.size(); ++i)
        for (int b = 0; b < 32; ++b)
            if ((key.masks[i] >> b) & 1U) {
                if (key.rows)
                    edges.emplace_back(static_cast<int>(i), b);
                else
                    edges.emplace_back(b, static_cast<int>(i));
            }
    return BipartiteGraph(key.left, key.right, std::move(edges));
}

} // namespace detail

/// Connected bipartite graphs with 1..max_edges edges, one per isomorphism
/// class that preserves sides, in canonical-key order.
inline std::vector<BipartiteGraph> connected_bipartite_graphs(int max_edges)
{
    std::vector<BipartiteGraph> out;
    if (max_edges < 1)
        return out;
    if (max_edges > 10)
        fail(ErrorKind::TooLarge, "connected bipartite enumeration limited to 10 edges");
    std::set<detail::BipartiteKey> layer{detail::canonical_key(complete_bipartite(1, 1))};
    for (int e = 1;; ++e) {
        for (const auto& key : layer)
            out.push_back(detail::from_key(key));
        if (e == max_edges)
            break;
        std::set<detail::BipartiteKey> grown;
        for (const auto& key : layer) {
            const auto g = detail::from_key(key);
            const int m = g.left_count(), n = g.right_count();
            auto add = [&](int left, int right, Edge extra) {
                auto edges = g.edges();
                edges.push_back(extra);
                grown.insert(detail::canonical_key(BipartiteGraph(left, right, std::move(edges))));
            };
            for (int u = 0; u < m; ++u)
                for (int v = 0; v < n; ++v)
                    if (!g.adjacent(u, v))
                        add(m, n, {u, v});
            for (int v = 0; v < n; ++v)
                add(m + 1, n, {m, v});
            for (int u = 0; u < m; ++u)
                add(m, n + 1, {u, n});
        }
        layer = std::move(grown);
    }
    return out;
}

/// Random joint pmf on `variables` coordinates with alphabets of size
/// 1..max_alphabet; roughly `zero_fraction` of the grid gets zero mass.
inline JointPmf random_joint_pmf(std::mt19937_64& rng, std::size_t variables, int max_alphabet, double zero_fraction)
{
    std::vector<int> sizes(variables);
    for (auto& s : sizes)
        s = 1 + detail::index_draw(rng, max_alphabet);
    std::map<Tuple, double> weights;
    double total = 0.0;
    Tuple t(variables, 0);
    for (;;) {
        const double w = detail::unit_draw(rng) < zero_fraction ? 0.0 : detail::unit_draw(rng) + 1e-3;
        if (w > 0.0) {
            weights[t] = w;
            total += w;
        }
        std::size_t i = 0;
        while (i < variables && ++t[i] == sizes[i])
            t[i++] = 0;
        if (i == variables)
            break;
    }
    if (weights.empty()) {
        weights[Tuple(variables, 0)] = 1.0;
        total = 1.0;
    }
    for (auto& [k, w] : weights)
        w /= total;
    return JointPmf(variables, std::move(weights));
}

/// Random cover family over [0, n) that may include out-of-range elements;
/// the multiplicity is drawn between 1 and the achieved coverage.
inline CoverFamily random_cover_family(std::mt19937_64& rng, std::size_t n)
{
    const int count = 1 + detail::index_draw(rng, 5);
    CoverFamily family;
    for (int j = 0; j < count; ++j) {
        std::vector<long> s;
        const long lo = -2, hi = static_cast<long>(n) + 2;
        for (long e = lo; e < hi; ++e)
            if (detail::unit_draw(rng) < 0.45)
                s.push_back(e);
        family.subsets.push_back(std::move(s));
    }
    for (std::size_t i = 0; i < n; ++i) {
        bool covered = false;
        for (const auto& s : family.subsets)
            covered = covered || std::find(s.begin(), s.end(), static_cast<long>(i)) != s.end();
        if (!covered)
            family.subsets[static_cast<std::size_t>(detail::index_draw(rng, count))].push_back(static_cast<long>(i));
    }
    family.multiplicity = 1;
    const int reach = family.coverage(n);
    family.multiplicity = 1 + detail::index_draw(rng, std::max(1, reach));
    return family;
}

} // namespace entrobound
