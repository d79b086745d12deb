#pragma once

// Finite probability mass functions over integer-coded outcomes.
//
// Outcomes are opaque integer codes; text front ends keep their own symbol
// tables (see io.hpp). All entropies are in nats.

#include <entrobound/error.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace entrobound {

using Outcome = std::int64_t;
using Tuple = std::vector<Outcome>;

/// Tolerance on the total mass of a PMF.
inline constexpr double kMassTolerance = 1e-9;
/// Atoms below this are treated as absent for support and richness questions.
inline constexpr double kZeroMass = 1e-15;
/// Relative slack for verdicts on provably-true inequalities.
inline constexpr double kInequalitySlack = 1e-9;

/// lhs <= rhs + tol * max(1, |rhs|)
inline bool holds_with_slack(double lhs, double rhs, double tol = kInequalitySlack)
{
    return lhs <= rhs + tol * std::max(1.0, std::abs(rhs));
}

inline bool close_with_slack(double a, double b, double tol = kInequalitySlack)
{
    return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

namespace detail {

inline void check_mass(double total, std::string_view what)
{
    if (!(std::abs(total - 1.0) <= kMassTolerance))
        fail(ErrorKind::InvalidInput, std::string(what) + " mass sums to " + std::to_string(total));
}

inline void check_probability(double p, std::string_view what)
{
    if (!(p >= 0.0) || !std::isfinite(p))
        fail(ErrorKind::InvalidInput, std::string(what) + " has a negative or non-finite atom");
}

} // namespace detail

class Pmf {
public:
    explicit Pmf(std::map<Outcome, double> atoms) : atoms_(std::move(atoms))
    {
        double total = 0.0;
        for (const auto& [x, p] : atoms_) {
            detail::check_probability(p, "pmf");
            total += p;
        }
        detail::check_mass(total, "pmf");
    }

    static Pmf uniform(std::size_t n)
    {
        if (n == 0)
            fail(ErrorKind::EmptySupport, "uniform pmf over zero atoms");
        std::map<Outcome, double> atoms;
        for (std::size_t i = 0; i < n; ++i)
            atoms.emplace(static_cast<Outcome>(i), 1.0 / static_cast<double>(n));
        return Pmf(std::move(atoms));
    }

    static Pmf point_mass(Outcome x) { return Pmf({{x, 1.0}}); }

    const std::map<Outcome, double>& atoms() const noexcept { return atoms_; }

    double operator()(Outcome x) const
    {
        auto it = atoms_.find(x);
        return it == atoms_.end() ? 0.0 : it->second;
    }

    std::size_t support_size() const
    {
        return static_cast<std::size_t>(std::count_if(atoms_.begin(), atoms_.end(),
                                                      [](const auto& a) { return a.second >= kZeroMass; }));
    }

private:
    std::map<Outcome, double> atoms_;
};

/// Joint PMF of `variable_count` discrete coordinates. A zero-coordinate
/// JointPmf is the point mass on the empty tuple.
class JointPmf {
public:
    JointPmf(std::size_t variable_count, std::map<Tuple, double> atoms)
        : variable_count_(variable_count), atoms_(std::move(atoms))
    {
        double total = 0.0;
        for (const auto& [t, p] : atoms_) {
            if (t.size() != variable_count_)
                fail(ErrorKind::InvalidInput, "joint pmf tuple has length " + std::to_string(t.size()) +
                                                  ", expected " + std::to_string(variable_count_));
            detail::check_probability(p, "joint pmf");
            total += p;
        }
        detail::check_mass(total, "joint pmf");
    }

    /// Accumulates duplicate tuples.
    static JointPmf from_samples(std::size_t variable_count, const std::vector<std::pair<Tuple, double>>& rows)
    {
        std::map<Tuple, double> atoms;
        for (const auto& [t, p] : rows)
            atoms[t] += p;
        return JointPmf(variable_count, std::move(atoms));
    }

    std::size_t variable_count() const noexcept { return variable_count_; }
    const std::map<Tuple, double>& atoms() const noexcept { return atoms_; }

    double operator()(const Tuple& t) const
    {
        auto it = atoms_.find(t);
        return it == atoms_.end() ? 0.0 : it->second;
    }

    std::size_t support_size() const
    {
        return static_cast<std::size_t>(std::count_if(atoms_.begin(), atoms_.end(),
                                                      [](const auto& a) { return a.second >= kZeroMass; }));
    }

    /// Single-coordinate view.
    Pmf coordinate(std::size_t i) const
    {
        if (i >= variable_count_)
            fail(ErrorKind::InvalidParameter, "coordinate out of range");
        std::map<Outcome, double> m;
        for (const auto& [t, p] : atoms_)
            m[t[i]] += p;
        return Pmf(std::move(m));
    }

private:
    std::size_t variable_count_;
    std::map<Tuple, double> atoms_;
};

/// Random vectors drawn as products of independent coordinates.
inline JointPmf product(const std::vector<Pmf>& factors)
{
    std::map<Tuple, double> atoms{{Tuple{}, 1.0}};
    for (const auto& f : factors) {
        std::map<Tuple, double> next;
        for (const auto& [t, p] : atoms)
            for (const auto& [x, q] : f.atoms()) {
                Tuple u = t;
                u.push_back(x);
                next[u] += p * q;
            }
        atoms = std::move(next);
    }
    return JointPmf(factors.size(), std::move(atoms));
}

} // namespace entrobound
