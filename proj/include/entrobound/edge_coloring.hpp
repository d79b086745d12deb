#pragma once

// Proper edge colourings of bipartite graphs, colour richness, the
// d_L d_R / m lower bound for richness-constrained colourings and an exact
// search for the fewest colours meeting a richness cap.

#include <entrobound/entropy.hpp>
#include <entrobound/error.hpp>
#include <entrobound/graph.hpp>
#include <entrobound/pmf.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

namespace entrobound {

inline constexpr std::size_t kRichSearchMaxEdges = 16;

/// Colour of each edge, indexed like BipartiteGraph::edges().
class EdgeColoring {
public:
    EdgeColoring() = default;

    EdgeColoring(std::vector<int> colors, int color_count) : colors_(std::move(colors)), color_count_(color_count)
    {
        if (color_count_ < 0)
            fail(ErrorKind::InvalidParameter, "negative colour count");
        for (int c : colors_)
            if (c < 0 || c >= color_count_)
                fail(ErrorKind::InvalidInput, "colour id " + std::to_string(c) + " outside [0, " +
                                                  std::to_string(color_count_) + ")");
    }

    /// Builds from (u, v, colour) triples; colour_count is one past the largest id.
    static EdgeColoring from_triples(const BipartiteGraph& g, const std::vector<std::tuple<int, int, int>>& triples)
    {
        std::vector<int> colors(g.edge_count(), -1);
        int count = 0;
        for (auto [u, v, c] : triples) {
            const int e = g.edge_index(u, v);
            if (e < 0)
                fail(ErrorKind::InvalidInput, "coloured pair (" + std::to_string(u) + "," + std::to_string(v) +
                                                  ") is not an edge");
            if (c < 0)
                fail(ErrorKind::InvalidInput, "negative colour id");
            colors[static_cast<std::size_t>(e)] = c;
            count = std::max(count, c + 1);
        }
        if (std::find(colors.begin(), colors.end(), -1) != colors.end())
            fail(ErrorKind::InvalidInput, "edge left uncoloured");
        return EdgeColoring(std::move(colors), count);
    }

    const std::vector<int>& colors() const noexcept { return colors_; }
    int color_count() const noexcept { return color_count_; }
    int operator[](std::size_t edge) const { return colors_.at(edge); }

    /// Number of colour ids actually used.
    int used_colors() const
    {
        std::vector<int> c = colors_;
        std::sort(c.begin(), c.end());
        return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
    }

private:
    std::vector<int> colors_;
    int color_count_ = 0;
};

namespace detail {

inline void check_covers(const BipartiteGraph& g, const EdgeColoring& c)
{
    if (c.colors().size() != g.edge_count())
        fail(ErrorKind::InvalidInput, "colouring does not cover every edge");
}

/// Sorted colour lists at each left and right vertex.
inline std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>
colours_at_vertices(const BipartiteGraph& g, const EdgeColoring& c)
{
    std::vector<std::vector<int>> left(static_cast<std::size_t>(g.left_count()));
    std::vector<std::vector<int>> right(static_cast<std::size_t>(g.right_count()));
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        left[static_cast<std::size_t>(u)].push_back(c[e]);
        right[static_cast<std::size_t>(v)].push_back(c[e]);
    }
    for (auto& l : left)
        std::sort(l.begin(), l.end());
    for (auto& r : right)
        std::sort(r.begin(), r.end());
    return {std::move(left), std::move(right)};
}

} // namespace detail

inline bool verify_proper(const BipartiteGraph& g, const EdgeColoring& c)
{
    detail::check_covers(g, c);
    auto [left, right] = detail::colours_at_vertices(g, c);
    auto distinct = [](const std::vector<int>& v) { return std::adjacent_find(v.begin(), v.end()) == v.end(); };
    return std::all_of(left.begin(), left.end(), distinct) && std::all_of(right.begin(), right.end(), distinct);
}

struct ColoringRichness {
    int m = 0;
    int left = 0;
    int right = 0;
};

/// Largest number of colours seen at both a left and a right vertex, over
/// all left/right pairs (adjacent or not).
inline ColoringRichness coloring_richness(const BipartiteGraph& g, const EdgeColoring& c)
{
    detail::check_covers(g, c);
    auto [left, right] = detail::colours_at_vertices(g, c);
    ColoringRichness best;
    std::vector<int> scratch;
    for (int u = 0; u < g.left_count(); ++u)
        for (int v = 0; v < g.right_count(); ++v) {
            scratch.clear();
            const auto& a = left[static_cast<std::size_t>(u)];
            const auto& b = right[static_cast<std::size_t>(v)];
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(scratch));
            if (static_cast<int>(scratch.size()) > best.m)
                best = {static_cast<int>(scratch.size()), u, v};
        }
    return best;
}

struct RichColorBound {
    int min_left_degree = 0;
    int min_right_degree = 0;
    double raw = 0.0; // d_L d_R / m
    int colors = 0;   // ceil(d_L d_R / m)
};

inline RichColorBound rich_coloring_lower_bound(const BipartiteGraph& g, int m)
{
    if (m < 1)
        fail(ErrorKind::InvalidParameter, "richness cap must be positive");
    if (g.has_isolated_vertex())
        fail(ErrorKind::Precondition, "rich colouring bound needs a graph without isolated vertices");
    RichColorBound b;
    b.min_left_degree = g.min_left_degree();
    b.min_right_degree = g.min_right_degree();
    const long product = static_cast<long>(b.min_left_degree) * b.min_right_degree;
    b.raw = static_cast<double>(product) / m;
    b.colors = static_cast<int>((product + m - 1) / m);
    return b;
}

/// Exactly max-degree colours (Konig), by inserting edges one at a time and
/// swapping the two relevant colours along an alternating path when the
/// free colours at the endpoints differ.
inline EdgeColoring proper_edge_color_bipartite(const BipartiteGraph& g)
{
    const int delta = g.max_degree();
    const int left = g.left_count();
    const int n = g.vertex_count();
    // partner[x][c]: the vertex joined to x by the edge of colour c, or -1.
    std::vector<std::vector<int>> partner(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(delta), -1));
    auto at = [&](int x, int c) -> int& { return partner[static_cast<std::size_t>(x)][static_cast<std::size_t>(c)]; };
    auto first_free = [&](int x) {
        for (int c = 0; c < delta; ++c)
            if (at(x, c) == -1)
                return c;
        fail(ErrorKind::InternalInvariant, "no free colour at a vertex of degree <= max degree");
    };

    std::vector<std::tuple<int, int, int>> path;
    for (auto [lu, rv] : g.edges()) {
        const int u = lu, v = left + rv;
        const int a = first_free(u);
        if (at(v, a) != -1) {
            const int b = first_free(v);
            path.clear();
            int x = v, c = a;
            while (at(x, c) != -1) {
                const int y = at(x, c);
                path.emplace_back(x, y, c);
                x = y;
                c = c == a ? b : a;
            }
            for (auto [p, q, col] : path) {
                at(p, col) = -1;
                at(q, col) = -1;
            }
            for (auto [p, q, col] : path) {
                const int flipped = col == a ? b : a;
                at(p, flipped) = q;
                at(q, flipped) = p;
            }
        }
        if (at(u, a) != -1 || at(v, a) != -1)
            fail(ErrorKind::InternalInvariant, "alternating path reached the other endpoint");
        at(u, a) = v;
        at(v, a) = u;
    }

    std::vector<int> colors;
    colors.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) {
        int found = -1;
        for (int c = 0; c < delta && found < 0; ++c)
            if (at(u, c) == left + v)
                found = c;
        colors.push_back(found);
    }
    return EdgeColoring(std::move(colors), delta);
}

struct RichSearchResult {
    /// Fewest colours admitting a proper colouring with richness <= m, if
    /// found within the colour budget.
    std::optional<int> colors;
    std::optional<EdgeColoring> witness;
    RichColorBound bound;
    std::uint64_t nodes = 0;
};

namespace detail {

class RichSearch {
public:
    RichSearch(const BipartiteGraph& g, int m, int palette)
        : g_(g), m_(m), palette_(palette), left_(static_cast<std::size_t>(g.left_count()), 0),
          right_(static_cast<std::size_t>(g.right_count()), 0), colors_(g.edge_count(), -1)
    {
    }

    bool run() { return expand(0, 0); }
    const std::vector<int>& colors() const { return colors_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    bool admissible(int u, int v, std::uint32_t bit) const
    {
        if ((left_[static_cast<std::size_t>(u)] | right_[static_cast<std::size_t>(v)]) & bit)
            return false;
        const std::uint32_t lu = left_[static_cast<std::size_t>(u)] | bit;
        const std::uint32_t rv = right_[static_cast<std::size_t>(v)] | bit;
        for (std::uint32_t r : right_)
            if ((r & bit) && std::popcount(lu & r) > m_)
                return false;
        for (std::uint32_t l : left_)
            if ((l & bit) && std::popcount(l & rv) > m_)
                return false;
        return std::popcount(lu & rv) <= m_;
    }

    // Colours enter in increasing order along the edge order, which fixes
    // one representative per permutation of colour classes.
    bool expand(std::size_t edge, int used)
    {
        ++nodes_;
        if (edge == colors_.size())
            return true;
        auto [u, v] = g_.edges()[edge];
        const int limit = std::min(palette_, used + 1);
        for (int c = 0; c < limit; ++c) {
            const std::uint32_t bit = std::uint32_t{1} << c;
            if (!admissible(u, v, bit))
                continue;
            left_[static_cast<std::size_t>(u)] |= bit;
            right_[static_cast<std::size_t>(v)] |= bit;
            colors_[edge] = c;
            if (expand(edge + 1, std::max(used, c + 1)))
                return true;
            left_[static_cast<std::size_t>(u)] &= ~bit;
            right_[static_cast<std::size_t>(v)] &= ~bit;
            colors_[edge] = -1;
        }
        return false;
    }

    const BipartiteGraph& g_;
    int m_;
    int palette_;
    std::vector<std::uint32_t> left_;
    std::vector<std::uint32_t> right_;
    std::vector<int> colors_;
    std::uint64_t nodes_ = 0;
};

} // namespace detail

/// Tries palettes of size max-degree, max-degree + 1, ... up to `budget`.
/// The search never consults the d_L d_R / m bound; it is reported alongside
/// so callers can check the result against it.
inline RichSearchResult min_colors_rich(const BipartiteGraph& g, int m, int budget)
{
    if (m < 1)
        fail(ErrorKind::InvalidParameter, "richness cap must be positive");
    if (g.edge_count() > kRichSearchMaxEdges)
        fail(ErrorKind::TooLarge, "exact rich colouring search limited to " + std::to_string(kRichSearchMaxEdges) +
                                      " edges");
    RichSearchResult result;
    result.bound = rich_coloring_lower_bound(g, m);
    for (int palette = std::max(1, g.max_degree()); palette <= std::min(budget, 32); ++palette) {
        detail::RichSearch search(g, m, palette);
        const bool found = search.run();
        result.nodes += search.nodes();
        if (found) {
            EdgeColoring c(search.colors(), palette);
            result.colors = c.used_colors();
            result.witness = std::move(c);
            return result;
        }
    }
    return result;
}

/// Colour, left endpoint and right endpoint of a uniformly random edge, as
/// coordinates (A, X, Y) = (0, 1, 2).
inline JointPmf coloring_to_joint_pmf(const BipartiteGraph& g, const EdgeColoring& c)
{
    detail::check_covers(g, c);
    if (g.edge_count() == 0)
        fail(ErrorKind::EmptySupport, "edgeless graph has no edge distribution");
    const double p = 1.0 / static_cast<double>(g.edge_count());
    std::vector<std::pair<Tuple, double>> rows;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        rows.push_back({Tuple{c[e], u, v}, p});
    }
    return JointPmf::from_samples(3, rows);
}

} // namespace entrobound
