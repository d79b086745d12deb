#pragma once

// Exact walk censuses on bipartite graphs, the degree-entropy lower bounds on
// the number of k-walks, and the exact distribution of the centre-out random
// walk used to derive them.
//
// A walk of length k is a vertex sequence x_0 ... x_k with consecutive
// vertices adjacent. The directed census counts these sequences; the
// undirected census identifies a sequence with its reversal.

#include <entrobound/bigint.hpp>
#include <entrobound/entropy.hpp>
#include <entrobound/error.hpp>
#include <entrobound/graph.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

namespace entrobound {

inline constexpr int kChainMaxLength = 7;
inline constexpr std::size_t kChainMaxEdges = 12;

struct WalkCensus {
    int k = 0;
    BigInt directed;
    BigInt palindromes;
    BigInt undirected; // (directed + palindromes) / 2
};

namespace detail {

inline std::vector<std::vector<int>> flat_adjacency(const BipartiteGraph& g)
{
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertex_count()));
    const int left = g.left_count();
    for (auto [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)].push_back(left + v);
        adj[static_cast<std::size_t>(left + v)].push_back(u);
    }
    return adj;
}

} // namespace detail

/// ones^T A^k ones by repeated neighbour sums. A palindromic sequence of
/// even length 2h is fixed by its first h steps; odd lengths have none.
inline WalkCensus walk_census(const BipartiteGraph& g, int k)
{
    if (k < 1)
        fail(ErrorKind::InvalidParameter, "walk length must be positive");
    const auto adj = detail::flat_adjacency(g);
    std::vector<BigInt> ends(adj.size(), BigInt(1)), next(adj.size());

    WalkCensus c;
    c.k = k;
    auto total = [&] {
        BigInt s = 0;
        for (const auto& x : ends)
            s += x;
        return s;
    };
    for (int step = 1; step <= k; ++step) {
        for (std::size_t v = 0; v < adj.size(); ++v) {
            next[v] = 0;
            for (int w : adj[v])
                next[v] += ends[static_cast<std::size_t>(w)];
        }
        std::swap(ends, next);
        if (k % 2 == 0 && step == k / 2)
            c.palindromes = total();
    }
    c.directed = total();
    c.undirected = (c.directed + c.palindromes) / 2;
    return c;
}

struct WalkBounds {
    int k = 0;
    double h_left = 0.0;  // H(P)
    double h_right = 0.0; // H(Q)
    double lb1 = 0.0;     // ln of the degree-entropy bound
    double lb2 = 0.0;     // ln of the side-size bound
};

inline WalkBounds walk_bounds(const BipartiteGraph& g, int k)
{
    if (k < 1)
        fail(ErrorKind::InvalidParameter, "walk length must be positive");
    const auto pmfs = degree_pmfs(g);
    WalkBounds b;
    b.k = k;
    b.h_left = entropy(pmfs.left);
    b.h_right = entropy(pmfs.right);
    const double log_edges = std::log(static_cast<double>(g.edge_count()));
    const double log_sides = std::log(static_cast<double>(g.left_count())) + std::log(static_cast<double>(g.right_count()));
    const double hsum = b.h_left + b.h_right;
    if (k % 2 == 1) {
        const double half = 0.5 * (k - 1);
        b.lb1 = k * log_edges - half * hsum;
        b.lb2 = k * log_edges - half * log_sides;
    }
    else {
        const double half = 0.5 * k - 1.0;
        const double smaller = std::log(static_cast<double>(std::min(g.left_count(), g.right_count())));
        b.lb1 = k * log_edges - half * hsum - std::min(b.h_left, b.h_right);
        b.lb2 = k * log_edges - half * log_sides - smaller;
    }
    return b;
}

/// Distribution over edge sequences (E_1..E_k), coded by edge index, of the
/// walk that draws its centre edge uniformly and then extends outward one
/// edge at a time, each extension uniform over the edges at the current end.
struct WalkChainPmf {
    int k = 0;
    JointPmf pmf{0, {{Tuple{}, 1.0}}};
};

namespace detail {

struct PartialWalk {
    std::vector<Outcome> edges;
    double probability = 1.0;
};

/// All outward extensions of `steps` edges starting from flat vertex `start`.
inline std::vector<PartialWalk> extensions(const BipartiteGraph& g, int start, int steps)
{
    const int left = g.left_count();
    std::vector<PartialWalk> frontier{{{}, 1.0}};
    std::vector<int> ends{start};
    for (int s = 0; s < steps; ++s) {
        std::vector<PartialWalk> grown;
        std::vector<int> grown_ends;
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            const int x = ends[i];
            const bool on_left = x < left;
            const auto& nbrs = on_left ? g.left_neighbors(x) : g.right_neighbors(x - left);
            const double share = 1.0 / static_cast<double>(nbrs.size());
            for (int w : nbrs) {
                const int e = on_left ? g.edge_index(x, w) : g.edge_index(w, x - left);
                PartialWalk p = frontier[i];
                p.edges.push_back(e);
                p.probability *= share;
                grown.push_back(std::move(p));
                grown_ends.push_back(on_left ? left + w : w);
            }
        }
        frontier = std::move(grown);
        ends = std::move(grown_ends);
    }
    return frontier;
}

} // namespace detail

inline WalkChainPmf walk_chain_pmf(const BipartiteGraph& g, int k)
{
    if (k < 1)
        fail(ErrorKind::InvalidParameter, "walk length must be positive");
    if (k % 2 == 0)
        fail(ErrorKind::Unsupported, "centre-out walk distribution is built for odd lengths only");
    if (k > kChainMaxLength)
        fail(ErrorKind::TooLarge, "walk distribution limited to k <= " + std::to_string(kChainMaxLength));
    if (g.edge_count() > kChainMaxEdges)
        fail(ErrorKind::TooLarge, "walk distribution limited to " + std::to_string(kChainMaxEdges) + " edges");
    if (g.edge_count() == 0)
        fail(ErrorKind::EmptySupport, "walk distribution of an edgeless graph");

    const int half = (k - 1) / 2;
    const double centre = 1.0 / static_cast<double>(g.edge_count());
    std::map<Tuple, double> atoms;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        const auto back = detail::extensions(g, u, half);
        const auto ahead = detail::extensions(g, g.left_count() + v, half);
        for (const auto& b : back)
            for (const auto& a : ahead) {
                Tuple t(b.edges.rbegin(), b.edges.rend());
                t.push_back(static_cast<Outcome>(e));
                t.insert(t.end(), a.edges.begin(), a.edges.end());
                atoms[t] += centre * b.probability * a.probability;
            }
    }
    return {k, JointPmf(static_cast<std::size_t>(k), std::move(atoms))};
}

/// True when consecutive edges of `sequence` trace a walk.
inline bool is_walk(const BipartiteGraph& g, const Tuple& sequence)
{
    if (sequence.empty())
        return false;
    const int left = g.left_count();
    auto ends = [&](Outcome e) {
        auto [u, v] = g.edges().at(static_cast<std::size_t>(e));
        return std::pair{u, left + v};
    };
    for (Outcome e : sequence)
        if (e < 0 || static_cast<std::size_t>(e) >= g.edge_count())
            return false;
    const auto [a, b] = ends(sequence.front());
    for (int start : {a, b}) {
        int at = start == a ? b : a;
        bool ok = true;
        for (std::size_t i = 1; i < sequence.size() && ok; ++i) {
            auto [p, q] = ends(sequence[i]);
            if (p == at)
                at = q;
            else if (q == at)
                at = p;
            else
                ok = false;
        }
        if (ok)
            return true;
    }
    return false;
}

struct ChainEntropyAudit {
    int k = 0;
    double direct_entropy = 0.0;
    double closed_form = 0.0; // k ln|E| - (k-1)/2 [H(P) + H(Q)]
    bool entropies_agree = false;
    double total_mass = 0.0;
    bool support_is_walks = false;
    std::size_t support_size = 0;
    WalkCensus census;
    bool support_within_undirected = false;
    bool support_within_directed = false;
    bool support_equals_undirected = false;
    bool support_equals_directed = false;

    bool holds() const
    {
        return entropies_agree && support_is_walks && support_within_directed && support_within_undirected;
    }
};

inline ChainEntropyAudit chain_entropy_audit(const BipartiteGraph& g, int k, double tol = 1e-9)
{
    const auto chain = walk_chain_pmf(g, k);
    const auto b = walk_bounds(g, k);
    ChainEntropyAudit a;
    a.k = k;
    a.direct_entropy = entropy(chain.pmf);
    a.closed_form = b.lb1;
    a.entropies_agree = std::abs(a.direct_entropy - a.closed_form) <= tol;
    a.support_is_walks = true;
    for (const auto& [t, p] : chain.pmf.atoms()) {
        a.total_mass += p;
        if (!is_walk(g, t))
            a.support_is_walks = false;
    }
    a.support_size = chain.pmf.support_size();
    a.census = walk_census(g, k);
    const BigInt support(a.support_size);
    a.support_within_undirected = support <= a.census.undirected;
    a.support_within_directed = support <= a.census.directed;
    a.support_equals_undirected = support == a.census.undirected;
    a.support_equals_directed = support == a.census.directed;
    return a;
}

} // namespace entrobound
