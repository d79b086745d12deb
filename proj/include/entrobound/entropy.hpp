#pragma once

// Shannon entropy (nats), marginals, Shearer's lemma checking, and the
// conditional-entropy inequality H(A|X) + H(A|Y) <= H(A) + ln m with its
// conditionally-independent coupling.

#include <entrobound/error.hpp>
#include <entrobound/pmf.hpp>

#include <algorithm>
#include <iterator>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace entrobound {

inline double entropy(const Pmf& p)
{
    double h = 0.0;
    for (const auto& [x, q] : p.atoms())
        if (q > 0.0)
            h -= q * std::log(q);
    return std::max(h, 0.0);
}

inline double entropy(const JointPmf& j)
{
    double h = 0.0;
    for (const auto& [t, q] : j.atoms())
        if (q > 0.0)
            h -= q * std::log(q);
    return std::max(h, 0.0);
}

/// Coordinate sets are 0-based and kept sorted and unique.
using Coords = std::vector<std::size_t>;

namespace detail {

inline Coords normalized(Coords c)
{
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
}

} // namespace detail

/// Distribution of X_S. An empty S yields the point mass on the empty tuple.
inline JointPmf marginal(const JointPmf& j, Coords coords)
{
    coords = detail::normalized(std::move(coords));
    for (auto c : coords)
        if (c >= j.variable_count())
            fail(ErrorKind::InvalidParameter, "marginal coordinate " + std::to_string(c) + " out of range");
    if (coords.empty())
        return JointPmf(0, {{Tuple{}, 1.0}});
    std::map<Tuple, double> atoms;
    Tuple key(coords.size());
    for (const auto& [t, p] : j.atoms()) {
        for (std::size_t i = 0; i < coords.size(); ++i)
            key[i] = t[coords[i]];
        atoms[key] += p;
    }
    return JointPmf(coords.size(), std::move(atoms));
}

inline double marginal_entropy(const JointPmf& j, const Coords& coords)
{
    return entropy(marginal(j, coords));
}

/// H(X_target | X_given) = H(X_target, X_given) - H(X_given).
inline double conditional_entropy(const JointPmf& j, const Coords& target, const Coords& given)
{
    Coords t = detail::normalized(target), g = detail::normalized(given);
    Coords both;
    std::set_union(t.begin(), t.end(), g.begin(), g.end(), std::back_inserter(both));
    if (both.size() != t.size() + g.size())
        fail(ErrorKind::InvalidParameter, "target and given coordinates overlap");
    return std::max(marginal_entropy(j, both) - marginal_entropy(j, g), 0.0);
}

// ---------------------------------------------------------------------------
// Shearer's lemma

/// Subsets S_1..S_m with declared multiplicity k. Elements are coordinate
/// indices and may fall outside [0, n); they are clipped before use.
struct CoverFamily {
    std::vector<std::vector<long>> subsets;
    int multiplicity = 1;

    CoverFamily clipped(std::size_t n) const
    {
        CoverFamily out{{}, multiplicity};
        out.subsets.reserve(subsets.size());
        for (const auto& s : subsets) {
            std::vector<long> kept;
            for (long e : s)
                if (e >= 0 && static_cast<std::size_t>(e) < n)
                    kept.push_back(e);
            out.subsets.push_back(std::move(kept));
        }
        return out;
    }

    /// min over i in [0, n) of the number of subsets containing i.
    int coverage(std::size_t n) const
    {
        std::vector<int> hits(n, 0);
        for (const auto& s : subsets) {
            std::set<long> uniq(s.begin(), s.end());
            for (long e : uniq)
                if (e >= 0 && static_cast<std::size_t>(e) < n)
                    ++hits[static_cast<std::size_t>(e)];
        }
        return n == 0 ? multiplicity : *std::min_element(hits.begin(), hits.end());
    }
};

struct ShearerReport {
    double lhs = 0.0; // k H(X^n)
    double rhs = 0.0; // sum_j H(X_{S_j cap [0,n)})
    bool holds = false;
};

inline ShearerReport shearer_check(const JointPmf& j, const CoverFamily& family, double tol = kInequalitySlack)
{
    if (family.multiplicity < 1)
        fail(ErrorKind::InvalidCover, "cover multiplicity must be positive");
    const std::size_t n = j.variable_count();
    const int cov = family.coverage(n);
    if (cov < family.multiplicity)
        fail(ErrorKind::InvalidCover, "some coordinate is covered " + std::to_string(cov) + " < " +
                                          std::to_string(family.multiplicity) + " times");

    ShearerReport r;
    r.lhs = family.multiplicity * entropy(j);
    for (const auto& s : family.clipped(n).subsets) {
        Coords c(s.begin(), s.end());
        r.rhs += marginal_entropy(j, c);
    }
    r.holds = holds_with_slack(r.lhs, r.rhs, tol);
    return r;
}

// ---------------------------------------------------------------------------
// Three-variable inequality

/// Which coordinate of a 3-variable JointPmf plays A, X and Y.
struct Roles {
    std::size_t a = 0;
    std::size_t x = 1;
    std::size_t y = 2;
};

namespace detail {

inline void check_roles(const JointPmf& j, const Roles& roles)
{
    if (j.variable_count() != 3)
        fail(ErrorKind::InvalidParameter, "expected a 3-variable joint pmf");
    if (roles.a > 2 || roles.x > 2 || roles.y > 2 || roles.a == roles.x || roles.a == roles.y ||
        roles.x == roles.y)
        fail(ErrorKind::InvalidParameter, "roles must be a permutation of the three coordinates");
}

inline std::map<std::pair<Outcome, Outcome>, double> pair_marginal(const JointPmf& j, std::size_t first,
                                                                   std::size_t second)
{
    std::map<std::pair<Outcome, Outcome>, double> m;
    for (const auto& [t, p] : j.atoms())
        m[{t[first], t[second]}] += p;
    return m;
}

} // namespace detail

struct RichnessResult {
    int m = 0;
    Outcome x = 0;
    Outcome y = 0;
};

/// max over (x, y) of |{a : P_{A,X}(a,x) P_{A,Y}(a,y) > 0}|, with atoms below
/// kZeroMass treated as zero. Ties go to the lexicographically first (x, y).
inline RichnessResult richness(const JointPmf& j, const Roles& roles = {})
{
    detail::check_roles(j, roles);
    std::map<Outcome, std::set<Outcome>> as_for_x, as_for_y;
    for (const auto& [key, p] : detail::pair_marginal(j, roles.a, roles.x))
        if (p >= kZeroMass)
            as_for_x[key.second].insert(key.first);
    for (const auto& [key, p] : detail::pair_marginal(j, roles.a, roles.y))
        if (p >= kZeroMass)
            as_for_y[key.second].insert(key.first);

    RichnessResult best;
    for (const auto& [x, ax] : as_for_x)
        for (const auto& [y, ay] : as_for_y) {
            int common = 0;
            auto i = ax.begin();
            auto k = ay.begin();
            while (i != ax.end() && k != ay.end()) {
                if (*i < *k)
                    ++i;
                else if (*k < *i)
                    ++k;
                else {
                    ++common;
                    ++i;
                    ++k;
                }
            }
            if (common > best.m)
                best = {common, x, y};
        }
    return best;
}

struct ConditionalInequalityReport {
    double h_a_given_x = 0.0;
    double h_a_given_y = 0.0;
    double h_a = 0.0;
    int m = 0;
    double lhs = 0.0; // H(A|X) + H(A|Y)
    double rhs = 0.0; // H(A) + ln m
    bool holds = false;
    double slack = 0.0; // rhs - lhs
    /// m == 1, i.e. the at-most-one-element hypothesis; then lhs <= H(A).
    bool single_rich = false;
};

inline ConditionalInequalityReport conditional_inequality_check(const JointPmf& j, const Roles& roles = {},
                                                                double tol = kInequalitySlack)
{
    detail::check_roles(j, roles);
    ConditionalInequalityReport r;
    r.h_a_given_x = conditional_entropy(j, {roles.a}, {roles.x});
    r.h_a_given_y = conditional_entropy(j, {roles.a}, {roles.y});
    r.h_a = marginal_entropy(j, {roles.a});
    r.m = richness(j, roles).m;
    r.lhs = r.h_a_given_x + r.h_a_given_y;
    r.rhs = r.h_a + std::log(static_cast<double>(r.m));
    r.holds = holds_with_slack(r.lhs, r.rhs, tol);
    r.slack = r.rhs - r.lhs;
    r.single_rich = r.m == 1;
    return r;
}

/// P'(a,x,y) = P_{A,X}(a,x) P_{A,Y}(a,y) / P_A(a): X and Y made conditionally
/// independent given A, keeping both pair marginals with A.
inline JointPmf conditional_coupling(const JointPmf& j, const Roles& roles = {})
{
    detail::check_roles(j, roles);
    const auto ax = detail::pair_marginal(j, roles.a, roles.x);
    const auto ay = detail::pair_marginal(j, roles.a, roles.y);
    std::map<Outcome, double> pa;
    for (const auto& [t, p] : j.atoms())
        pa[t[roles.a]] += p;

    std::map<Outcome, std::vector<std::pair<Outcome, double>>> xs, ys;
    for (const auto& [key, p] : ax)
        if (p > 0.0)
            xs[key.first].emplace_back(key.second, p);
    for (const auto& [key, p] : ay)
        if (p > 0.0)
            ys[key.first].emplace_back(key.second, p);

    std::map<Tuple, double> atoms;
    for (const auto& [a, mass] : pa) {
        if (!(mass > 0.0))
            continue;
        for (const auto& [x, pxa] : xs[a])
            for (const auto& [y, pya] : ys[a]) {
                Tuple t(3);
                t[roles.a] = a;
                t[roles.x] = x;
                t[roles.y] = y;
                atoms[t] += pxa * pya / mass;
            }
    }
    return JointPmf(3, std::move(atoms));
}

} // namespace entrobound
