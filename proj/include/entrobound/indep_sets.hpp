#pragma once

// Exact independent-set counting, the Kahn and Sah et al. upper bounds, and
// Zhao's inequality |I(G)|^2 <= |I(G x K_2)| with an executable injection
// from pairs of independent sets of G into independent sets of G x K_2.

#include <entrobound/bigint.hpp>
#include <entrobound/error.hpp>
#include <entrobound/graph.hpp>

#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

namespace entrobound {

inline constexpr int kBruteForceMaxVertices = 30;
inline constexpr int kMeetInMiddleMaxSide = 30;
inline constexpr int kZhaoCheckMaxVertices = 15;
inline constexpr int kZhaoInjectMaxVertices = 64;

struct IndSetCount {
    BigInt value;
    double log_value = 0.0;

    explicit IndSetCount(BigInt v) : value(std::move(v)), log_value(log_of(value)) {}
};

using VertexMask = std::uint64_t;

inline bool is_independent(const Graph& g, VertexMask set)
{
    for (VertexMask rest = set; rest != 0; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        if (g.neighbor_mask(v) & set)
            return false;
    }
    return true;
}

/// Every subset of V(g) tested directly.
inline IndSetCount count_independent_sets_bruteforce(const Graph& g)
{
    const int n = g.vertex_count();
    if (n > kBruteForceMaxVertices)
        fail(ErrorKind::TooLarge, "brute-force count limited to " + std::to_string(kBruteForceMaxVertices) + " vertices");
    std::vector<VertexMask> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        adj[static_cast<std::size_t>(v)] = g.neighbor_mask(v);

    std::uint64_t count = 0;
    const VertexMask end = VertexMask{1} << n;
    for (VertexMask s = 0; s < end; ++s) {
        bool ok = true;
        for (VertexMask rest = s; rest != 0 && ok; rest &= rest - 1)
            ok = (adj[static_cast<std::size_t>(std::countr_zero(rest))] & s) == 0;
        count += ok ? 1 : 0;
    }
    return IndSetCount(BigInt(count));
}

/// All independent sets of g as vertex masks, in increasing mask order.
inline std::vector<VertexMask> independent_sets(const Graph& g)
{
    const int n = g.vertex_count();
    if (n > 24)
        fail(ErrorKind::TooLarge, "independent set listing limited to 24 vertices");
    std::vector<VertexMask> out;
    const VertexMask end = VertexMask{1} << n;
    for (VertexMask s = 0; s < end; ++s)
        if (is_independent(g, s))
            out.push_back(s);
    return out;
}

/// Meet-in-the-middle over the smaller side: every subset S of that side is
/// independent, and contributes 2^(number of opposite vertices with no
/// neighbour in S). Subsets are walked in Gray-code order so each step
/// touches one vertex's neighbourhood.
inline IndSetCount count_independent_sets_bipartite(const BipartiteGraph& g)
{
    const bool left_small = g.left_count() <= g.right_count();
    const int small = left_small ? g.left_count() : g.right_count();
    const int other = left_small ? g.right_count() : g.left_count();
    if (small > kMeetInMiddleMaxSide)
        fail(ErrorKind::TooLarge, "meet-in-the-middle limited to a smaller side of " +
                                      std::to_string(kMeetInMiddleMaxSide));

    auto neighbours = [&](int v) -> const std::vector<int>& {
        return left_small ? g.left_neighbors(v) : g.right_neighbors(v);
    };

    std::vector<int> hits(static_cast<std::size_t>(other), 0);
    std::vector<std::uint64_t> by_free(static_cast<std::size_t>(other) + 1, 0);
    std::vector<char> in_set(static_cast<std::size_t>(small), 0);
    int blocked = 0;
    ++by_free[static_cast<std::size_t>(other)];

    const std::uint64_t steps = std::uint64_t{1} << small;
    for (std::uint64_t i = 1; i < steps; ++i) {
        const int v = std::countr_zero(i);
        auto& flag = in_set[static_cast<std::size_t>(v)];
        flag = !flag;
        for (int w : neighbours(v)) {
            auto& h = hits[static_cast<std::size_t>(w)];
            if (flag) {
                if (h++ == 0)
                    ++blocked;
            }
            else if (--h == 0)
                --blocked;
        }
        ++by_free[static_cast<std::size_t>(other - blocked)];
    }

    BigInt total = 0;
    for (int f = 0; f <= other; ++f)
        if (by_free[static_cast<std::size_t>(f)] != 0)
            total += BigInt(by_free[static_cast<std::size_t>(f)]) << f;
    return IndSetCount(std::move(total));
}

// ---------------------------------------------------------------------------
// Bounds (natural log)

/// (n / 2d) ln(2^(d+1) - 1) for a d-regular bipartite graph on n vertices.
inline double kahn_bound(const BipartiteGraph& g)
{
    const auto d = g.regular_degree();
    if (!d)
        fail(ErrorKind::NotRegular, "Kahn bound needs a regular bipartite graph");
    if (*d < 1)
        fail(ErrorKind::NotRegular, "Kahn bound needs degree at least 1");
    const double n = g.vertex_count();
    return n / (2.0 * *d) * std::log(std::ldexp(1.0, *d + 1) - 1.0);
}

namespace detail {

/// ln(2^a + 2^b - 1) / (a b) without forming 2^a.
inline double sah_edge_term(int a, int b)
{
    const int hi = std::max(a, b), lo = std::min(a, b);
    const double tail = std::ldexp(1.0, lo - hi) - std::ldexp(1.0, -hi);
    return (hi * std::log(2.0) + std::log1p(tail)) / (static_cast<double>(a) * b);
}

} // namespace detail

inline double sah_bound(const Graph& g)
{
    if (g.has_isolated_vertex())
        fail(ErrorKind::Precondition, "Sah et al. bound needs a graph without isolated vertices");
    double total = 0.0;
    for (auto [u, v] : g.edges())
        total += detail::sah_edge_term(g.degree(u), g.degree(v));
    return total;
}

inline double sah_bound(const BipartiteGraph& g)
{
    if (g.has_isolated_vertex())
        fail(ErrorKind::Precondition, "Sah et al. bound needs a graph without isolated vertices");
    double total = 0.0;
    for (auto [u, v] : g.edges())
        total += detail::sah_edge_term(g.left_degree(u), g.right_degree(v));
    return total;
}

/// Half the bipartite bound on g x K_2; collapses to sah_bound(g).
inline double sah_bound_general_via_cover(const Graph& g)
{
    if (g.has_isolated_vertex())
        fail(ErrorKind::Precondition, "Sah et al. bound needs a graph without isolated vertices");
    if (g.vertex_count() == 0)
        return 0.0;
    return 0.5 * sah_bound(bipartite_double_cover(g));
}

// ---------------------------------------------------------------------------
// Zhao's inequality

struct ZhaoCheck {
    BigInt lhs; // |I(G)|^2
    BigInt rhs; // |I(G x K_2)|
    bool holds = false;
    bool equal = false;
};

inline ZhaoCheck zhao_check(const Graph& g)
{
    if (g.vertex_count() > kZhaoCheckMaxVertices)
        fail(ErrorKind::TooLarge, "zhao check limited to " + std::to_string(kZhaoCheckMaxVertices) + " vertices");
    ZhaoCheck r;
    const auto base = count_independent_sets_bruteforce(g).value;
    r.lhs = base * base;
    r.rhs = g.vertex_count() == 0 ? BigInt(1) : count_independent_sets_bipartite(bipartite_double_cover(g)).value;
    r.holds = r.lhs <= r.rhs;
    r.equal = r.lhs == r.rhs;
    return r;
}

/// Vertex set of G x K_2: `left` holds v for (v,0), `right` holds v for (v,1).
struct CoverSet {
    VertexMask left = 0;
    VertexMask right = 0;

    friend bool operator==(const CoverSet&, const CoverSet&) = default;
};

inline bool is_independent_in_cover(const Graph& g, CoverSet s)
{
    for (VertexMask rest = s.left; rest != 0; rest &= rest - 1)
        if (g.neighbor_mask(std::countr_zero(rest)) & s.right)
            return false;
    return true;
}

struct ZhaoWitness {
    VertexMask s0 = 0;
    VertexMask s1 = 0;
    /// Edges (i, j) of G with i in s0 and j in s1.
    std::vector<Edge> conflict_edges;
    VertexMask swap_set = 0;
    CoverSet image;
};

/// First vertex set, in increasing order of its mask read as a binary number
/// (vertex 0 least significant), that holds exactly one endpoint of each given
/// edge. Each connected component of the edge set admits its two colour
/// classes and nothing else; masks of distinct components are disjoint, so
/// the minimum is the union of per-component minima. nullopt when the edges
/// form an odd cycle.
inline std::optional<VertexMask> first_edge_transversal(int vertex_count, const std::vector<Edge>& edges)
{
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertex_count));
    for (auto [u, v] : edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::vector<int> colour(static_cast<std::size_t>(vertex_count), -1);
    VertexMask result = 0;
    std::vector<int> stack;
    for (int root = 0; root < vertex_count; ++root) {
        if (colour[static_cast<std::size_t>(root)] != -1 || adj[static_cast<std::size_t>(root)].empty())
            continue;
        VertexMask side[2] = {0, 0};
        colour[static_cast<std::size_t>(root)] = 0;
        stack.assign(1, root);
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            const int c = colour[static_cast<std::size_t>(v)];
            side[c] |= VertexMask{1} << v;
            for (int w : adj[static_cast<std::size_t>(v)]) {
                auto& cw = colour[static_cast<std::size_t>(w)];
                if (cw == -1) {
                    cw = 1 - c;
                    stack.push_back(w);
                }
                else if (cw == c)
                    return std::nullopt;
            }
        }
        result |= std::min(side[0], side[1]);
    }
    return result;
}

namespace detail {

inline void check_mask_range(const Graph& g, VertexMask s, const char* what)
{
    if (g.vertex_count() < 64 && (s >> g.vertex_count()) != 0)
        fail(ErrorKind::InvalidParameter, std::string(what) + " has vertices outside the graph");
}

inline CoverSet swap_by(VertexMask x, VertexMask y, VertexMask t)
{
    // (i,0) -> (i,1) for i in T, and (j,1) -> (j,0) for j in T.
    return {(x & ~t) | (y & t), (y & ~t) | (x & t)};
}

} // namespace detail

inline ZhaoWitness zhao_inject(const Graph& g, VertexMask s0, VertexMask s1)
{
    if (g.vertex_count() > kZhaoInjectMaxVertices)
        fail(ErrorKind::TooLarge, "zhao injection limited to 64 vertices");
    detail::check_mask_range(g, s0, "s0");
    detail::check_mask_range(g, s1, "s1");
    if (!is_independent(g, s0) || !is_independent(g, s1))
        fail(ErrorKind::Precondition, "zhao injection needs two independent sets");

    ZhaoWitness w;
    w.s0 = s0;
    w.s1 = s1;
    auto has = [](VertexMask s, int v) { return (s >> v) & 1U; };
    for (auto [a, b] : g.edges()) {
        if (has(s0, a) && has(s1, b))
            w.conflict_edges.emplace_back(a, b);
        if (has(s0, b) && has(s1, a))
            w.conflict_edges.emplace_back(b, a);
    }
    // Conflict edges run from s0 \ s1 to s1 \ s0, so they form a bipartite graph.
    for (auto [i, j] : w.conflict_edges)
        if (has(s1, i) || has(s0, j))
            fail(ErrorKind::InternalInvariant, "conflict edge endpoint lies in both independent sets");

    const auto t = first_edge_transversal(g.vertex_count(), w.conflict_edges);
    if (!t)
        fail(ErrorKind::InternalInvariant, "conflict edges admit no transversal");
    w.swap_set = *t;
    w.image = detail::swap_by(s0, s1, w.swap_set);
    if (!is_independent_in_cover(g, w.image))
        fail(ErrorKind::InternalInvariant, "swapped set is not independent in the double cover");
    return w;
}

/// Recovers (s0, s1). Edges of G whose endpoints both lie on one side of
/// the image are exactly the conflict edges of the preimage, so the same
/// transversal T is found and the swap is undone. Anything that does not
/// re-inject to the same image is rejected.
inline std::pair<VertexMask, VertexMask> zhao_invert(const Graph& g, CoverSet image)
{
    if (g.vertex_count() > kZhaoInjectMaxVertices)
        fail(ErrorKind::TooLarge, "zhao injection limited to 64 vertices");
    detail::check_mask_range(g, image.left, "image");
    detail::check_mask_range(g, image.right, "image");

    std::vector<Edge> same_side;
    for (auto [a, b] : g.edges()) {
        const bool left = ((image.left >> a) & 1U) && ((image.left >> b) & 1U);
        const bool right = ((image.right >> a) & 1U) && ((image.right >> b) & 1U);
        if (left || right)
            same_side.emplace_back(a, b);
    }
    const auto t = first_edge_transversal(g.vertex_count(), same_side);
    if (!t)
        fail(ErrorKind::NotInRange, "same-side edges of the image contain an odd cycle");
    const CoverSet back = detail::swap_by(image.left, image.right, *t);
    const VertexMask s0 = back.left, s1 = back.right;
    if (!is_independent(g, s0) || !is_independent(g, s1))
        fail(ErrorKind::NotInRange, "reversed swap does not give two independent sets");
    if (zhao_inject(g, s0, s1).image != image)
        fail(ErrorKind::NotInRange, "reversed pair does not map back to the image");
    return {s0, s1};
}

struct ZhaoAudit {
    std::uint64_t independent_sets = 0;
    std::uint64_t pairs = 0;
    std::uint64_t distinct_images = 0;
    std::uint64_t round_trip_failures = 0;
    bool holds() const { return distinct_images == pairs && round_trip_failures == 0; }
};

/// Injects every pair of independent sets and inverts each image.
inline ZhaoAudit zhao_audit(const Graph& g)
{
    if (g.vertex_count() > 16)
        fail(ErrorKind::TooLarge, "zhao audit limited to 16 vertices");
    const auto sets = independent_sets(g);
    ZhaoAudit a;
    a.independent_sets = sets.size();
    std::unordered_set<std::uint64_t> images;
    images.reserve(sets.size() * sets.size());
    for (auto s0 : sets)
        for (auto s1 : sets) {
            ++a.pairs;
            const auto w = zhao_inject(g, s0, s1);
            images.insert((w.image.left << 32) | w.image.right);
            try {
                if (zhao_invert(g, w.image) != std::pair{s0, s1})
                    ++a.round_trip_failures;
            }
            catch (const Error&) {
                ++a.round_trip_failures;
            }
        }
    a.distinct_images = images.size();
    return a;
}

} // namespace entrobound
