#pragma once

// Simple undirected graphs and bipartite graphs with a fixed bipartition.
//
// Vertices are dense 0-based integers. Edge lists are kept sorted and are
// validated at construction: loops, duplicates and out-of-range endpoints are
// rejected, never repaired.

#include <entrobound/error.hpp>
#include <entrobound/pmf.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace entrobound {

using Edge = std::pair<int, int>;

class Graph {
public:
    Graph() = default;

    Graph(int vertex_count, std::vector<Edge> edges) : vertex_count_(vertex_count), edges_(std::move(edges))
    {
        if (vertex_count_ < 0)
            fail(ErrorKind::InvalidParameter, "negative vertex count");
        for (auto& [u, v] : edges_) {
            if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_)
                fail(ErrorKind::InvalidInput,
                     "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
            if (u == v)
                fail(ErrorKind::InvalidInput, "loop at vertex " + std::to_string(u));
            if (u > v)
                std::swap(u, v);
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            fail(ErrorKind::InvalidInput, "duplicate edge");
        build_adjacency();
    }

    static Graph edgeless(int n) { return Graph(n, {}); }

    int vertex_count() const noexcept { return vertex_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    const std::vector<int>& neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool adjacent(int u, int v) const
    {
        const auto& n = neighbors(u);
        return std::binary_search(n.begin(), n.end(), v);
    }

    /// Bit v of the result is set iff v ~ u. Requires at most 64 vertices.
    std::uint64_t neighbor_mask(int u) const
    {
        if (vertex_count_ > 64)
            fail(ErrorKind::TooLarge, "neighbor masks need at most 64 vertices");
        std::uint64_t mask = 0;
        for (int w : neighbors(u))
            mask |= std::uint64_t{1} << w;
        return mask;
    }

    int max_degree() const
    {
        int best = 0;
        for (int v = 0; v < vertex_count_; ++v)
            best = std::max(best, degree(v));
        return best;
    }

    bool has_isolated_vertex() const
    {
        for (int v = 0; v < vertex_count_; ++v)
            if (degree(v) == 0)
                return true;
        return false;
    }

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
    }

private:
    void build_adjacency()
    {
        adjacency_.assign(static_cast<std::size_t>(vertex_count_), {});
        for (auto [u, v] : edges_) {
            adjacency_[static_cast<std::size_t>(u)].push_back(v);
            adjacency_[static_cast<std::size_t>(v)].push_back(u);
        }
        for (auto& n : adjacency_)
            std::sort(n.begin(), n.end());
    }

    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
};

enum class Side { Left, Right };

struct SideVertex {
    Side side;
    int index;

    friend bool operator==(const SideVertex&, const SideVertex&) = default;
};

/// Bipartite graph with `left_count` left and `right_count` right vertices.
/// An edge (u, v) joins left vertex u to right vertex v.
class BipartiteGraph {
public:
    BipartiteGraph() = default;

    BipartiteGraph(int left_count, int right_count, std::vector<Edge> edges)
        : left_count_(left_count), right_count_(right_count), edges_(std::move(edges))
    {
        if (left_count_ < 1 || right_count_ < 1)
            fail(ErrorKind::InvalidParameter, "bipartite sides must be non-empty");
        for (auto [u, v] : edges_)
            if (u < 0 || v < 0 || u >= left_count_ || v >= right_count_)
                fail(ErrorKind::InvalidInput,
                     "bipartite edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            fail(ErrorKind::InvalidInput, "duplicate edge");

        left_adjacency_.assign(static_cast<std::size_t>(left_count_), {});
        right_adjacency_.assign(static_cast<std::size_t>(right_count_), {});
        for (auto [u, v] : edges_) {
            left_adjacency_[static_cast<std::size_t>(u)].push_back(v);
            right_adjacency_[static_cast<std::size_t>(v)].push_back(u);
        }
        for (auto& n : right_adjacency_)
            std::sort(n.begin(), n.end());
    }

    int left_count() const noexcept { return left_count_; }
    int right_count() const noexcept { return right_count_; }
    int vertex_count() const noexcept { return left_count_ + right_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    const std::vector<int>& left_neighbors(int u) const { return left_adjacency_.at(static_cast<std::size_t>(u)); }
    const std::vector<int>& right_neighbors(int v) const { return right_adjacency_.at(static_cast<std::size_t>(v)); }
    int left_degree(int u) const { return static_cast<int>(left_neighbors(u).size()); }
    int right_degree(int v) const { return static_cast<int>(right_neighbors(v).size()); }

    int degree(SideVertex x) const { return x.side == Side::Left ? left_degree(x.index) : right_degree(x.index); }

    bool adjacent(int u, int v) const
    {
        return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
    }

    /// Index of edge (u, v) in edges(), or -1.
    int edge_index(int u, int v) const
    {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
        if (it == edges_.end() || *it != Edge{u, v})
            return -1;
        return static_cast<int>(it - edges_.begin());
    }

    int min_left_degree() const
    {
        int best = left_degree(0);
        for (int u = 1; u < left_count_; ++u)
            best = std::min(best, left_degree(u));
        return best;
    }

    int min_right_degree() const
    {
        int best = right_degree(0);
        for (int v = 1; v < right_count_; ++v)
            best = std::min(best, right_degree(v));
        return best;
    }

    int max_degree() const
    {
        int best = 0;
        for (int u = 0; u < left_count_; ++u)
            best = std::max(best, left_degree(u));
        for (int v = 0; v < right_count_; ++v)
            best = std::max(best, right_degree(v));
        return best;
    }

    bool has_isolated_vertex() const { return min_left_degree() == 0 || min_right_degree() == 0; }

    /// Common degree when every vertex on both sides has the same degree.
    std::optional<int> regular_degree() const
    {
        const int d = left_degree(0);
        for (int u = 0; u < left_count_; ++u)
            if (left_degree(u) != d)
                return std::nullopt;
        for (int v = 0; v < right_count_; ++v)
            if (right_degree(v) != d)
                return std::nullopt;
        return d;
    }

    /// Flat vertex id used by as_graph(): left u -> u, right v -> left_count + v.
    int flat_id(SideVertex x) const { return x.side == Side::Left ? x.index : left_count_ + x.index; }

    Graph as_graph() const
    {
        std::vector<Edge> flat;
        flat.reserve(edges_.size());
        for (auto [u, v] : edges_)
            flat.emplace_back(u, left_count_ + v);
        return Graph(vertex_count(), std::move(flat));
    }

    friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b)
    {
        return a.left_count_ == b.left_count_ && a.right_count_ == b.right_count_ && a.edges_ == b.edges_;
    }

private:
    int left_count_ = 1;
    int right_count_ = 1;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> left_adjacency_ = std::vector<std::vector<int>>(1);
    std::vector<std::vector<int>> right_adjacency_ = std::vector<std::vector<int>>(1);
};

// ---------------------------------------------------------------------------
// Constructions

inline Graph complete_graph(int d)
{
    if (d < 1)
        fail(ErrorKind::InvalidParameter, "complete graph needs d >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < d; ++u)
        for (int v = u + 1; v < d; ++v)
            edges.emplace_back(u, v);
    return Graph(d, std::move(edges));
}

inline BipartiteGraph complete_bipartite(int a, int b)
{
    if (a < 1 || b < 1)
        fail(ErrorKind::InvalidParameter, "complete bipartite graph needs a, b >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v)
            edges.emplace_back(u, v);
    return BipartiteGraph(a, b, std::move(edges));
}

inline Graph cycle_graph(int n)
{
    if (n < 3)
        fail(ErrorKind::InvalidParameter, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v)
        edges.emplace_back(v, (v + 1) % n);
    return Graph(n, std::move(edges));
}

/// Vertex (a, b) of g x h gets id a * |V(h)| + b.
inline Graph tensor_product(const Graph& g, const Graph& h)
{
    const int hn = h.vertex_count();
    std::vector<Edge> edges;
    edges.reserve(2 * g.edge_count() * h.edge_count());
    for (auto [a, a2] : g.edges())
        for (auto [b, b2] : h.edges()) {
            edges.emplace_back(a * hn + b, a2 * hn + b2);
            edges.emplace_back(a * hn + b2, a2 * hn + b);
        }
    return Graph(g.vertex_count() * hn, std::move(edges));
}

/// g x K_2 with left vertex v = (v,0) and right vertex v = (v,1).
inline BipartiteGraph bipartite_double_cover(const Graph& g)
{
    if (g.vertex_count() < 1)
        fail(ErrorKind::InvalidParameter, "double cover of the empty graph");
    std::vector<Edge> edges;
    edges.reserve(2 * g.edge_count());
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(u, v);
        edges.emplace_back(v, u);
    }
    return BipartiteGraph(g.vertex_count(), g.vertex_count(), std::move(edges));
}

inline BipartiteGraph disjoint_union(const std::vector<BipartiteGraph>& parts)
{
    if (parts.empty())
        fail(ErrorKind::InvalidParameter, "disjoint union of no parts");
    int left = 0, right = 0;
    std::vector<Edge> edges;
    for (const auto& p : parts) {
        for (auto [u, v] : p.edges())
            edges.emplace_back(left + u, right + v);
        left += p.left_count();
        right += p.right_count();
    }
    return BipartiteGraph(left, right, std::move(edges));
}

struct DegreePmfs {
    Pmf left;  // P(u) = d(u) / |E|
    Pmf right; // Q(v) = d(v) / |E|
};

inline DegreePmfs degree_pmfs(const BipartiteGraph& g)
{
    if (g.edge_count() == 0)
        fail(ErrorKind::EmptySupport, "degree pmfs of an edgeless graph");
    const double total = static_cast<double>(g.edge_count());
    std::map<Outcome, double> left, right;
    for (int u = 0; u < g.left_count(); ++u)
        left.emplace(u, g.left_degree(u) / total);
    for (int v = 0; v < g.right_count(); ++v)
        right.emplace(v, g.right_degree(v) / total);
    return {Pmf(std::move(left)), Pmf(std::move(right))};
}

// ---------------------------------------------------------------------------
// Seeded generators. The uniform draw is derived from raw mt19937_64 output
// so corpora are identical across standard library implementations.

namespace detail {

inline double unit_draw(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline int index_draw(std::mt19937_64& rng, int bound)
{
    return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

} // namespace detail

inline BipartiteGraph random_bipartite(int m, int n, double edge_probability, std::uint64_t seed)
{
    if (!(edge_probability >= 0.0 && edge_probability <= 1.0))
        fail(ErrorKind::InvalidParameter, "edge probability outside [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v)
            if (detail::unit_draw(rng) < edge_probability)
                edges.emplace_back(u, v);
    return BipartiteGraph(m, n, std::move(edges));
}

inline Graph random_graph(int n, double edge_probability, std::uint64_t seed)
{
    if (!(edge_probability >= 0.0 && edge_probability <= 1.0))
        fail(ErrorKind::InvalidParameter, "edge probability outside [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (detail::unit_draw(rng) < edge_probability)
                edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

/// Gives every isolated vertex one edge to a seeded-random partner.
inline BipartiteGraph attach_isolated_vertices(const BipartiteGraph& g, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges = g.edges();
    std::vector<int> left_deg(static_cast<std::size_t>(g.left_count())), right_deg(static_cast<std::size_t>(g.right_count()));
    for (auto [u, v] : edges) {
        ++left_deg[static_cast<std::size_t>(u)];
        ++right_deg[static_cast<std::size_t>(v)];
    }
    for (int u = 0; u < g.left_count(); ++u)
        if (left_deg[static_cast<std::size_t>(u)] == 0) {
            int v = detail::index_draw(rng, g.right_count());
            edges.emplace_back(u, v);
            ++left_deg[static_cast<std::size_t>(u)];
            ++right_deg[static_cast<std::size_t>(v)];
        }
    for (int v = 0; v < g.right_count(); ++v)
        if (right_deg[static_cast<std::size_t>(v)] == 0) {
            int u = detail::index_draw(rng, g.left_count());
            edges.emplace_back(u, v);
            ++right_deg[static_cast<std::size_t>(v)];
        }
    return BipartiteGraph(g.left_count(), g.right_count(), std::move(edges));
}

/// Same for general graphs; a lone vertex in a 1-vertex graph stays isolated.
inline Graph attach_isolated_vertices(const Graph& g, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    const int n = g.vertex_count();
    std::vector<Edge> edges = g.edges();
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }
    if (n < 2)
        return g;
    for (int u = 0; u < n; ++u)
        if (deg[static_cast<std::size_t>(u)] == 0) {
            int v = detail::index_draw(rng, n - 1);
            if (v >= u)
                ++v;
            edges.emplace_back(u, v);
            ++deg[static_cast<std::size_t>(u)];
            ++deg[static_cast<std::size_t>(v)];
        }
    return Graph(n, std::move(edges));
}

} // namespace entrobound
