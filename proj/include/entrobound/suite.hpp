#pragma once

// The audit battery: every bound checked against its exact oracle over
// seeded corpora.

#include <entrobound/corpus.hpp>
#include <entrobound/edge_coloring.hpp>
#include <entrobound/entropy.hpp>
#include <entrobound/graph.hpp>
#include <entrobound/indep_sets.hpp>
#include <entrobound/io.hpp>
#include <entrobound/report.hpp>
#include <entrobound/walks.hpp>

#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

namespace entrobound {

struct SuiteConfig {
    std::uint64_t seed = 1;
    double tolerance = kInequalitySlack;

    int kahn_max_degree = 3;
    int kahn_max_copies = 2;

    int sah_trials = 500;
    int sah_max_side = 8;
    int sah_complete_max_side = 4;

    int cover_chain_trials = 200;
    int cover_chain_max_vertices = 10;

    int zhao_exhaustive_max_vertices = 5;
    int zhao_sampled_vertices = 6;
    int zhao_sampled_count = 300;

    int rich_max_degree = 3;

    int cond_trials = 1000;
    int shearer_trials = 1000;

    int walk_max_edges = 8;
    int walk_max_length = 6;
    int walk_regular_max_degree = 3;
    int walk_regular_max_length = 5;
};

#define ENTROBOUND_SUITE_FIELDS(X)                                                                            \
    X(seed) X(tolerance) X(kahn_max_degree) X(kahn_max_copies) X(sah_trials) X(sah_max_side)                     \
        X(sah_complete_max_side) X(cover_chain_trials) X(cover_chain_max_vertices) X(zhao_exhaustive_max_vertices) \
            X(zhao_sampled_vertices) X(zhao_sampled_count) X(rich_max_degree) X(cond_trials) X(shearer_trials)     \
                X(walk_max_edges) X(walk_max_length) X(walk_regular_max_degree) X(walk_regular_max_length)

inline nlohmann::ordered_json to_json(const SuiteConfig& c)
{
    nlohmann::ordered_json j;
#define ENTROBOUND_PUT(name) j[#name] = c.name;
    ENTROBOUND_SUITE_FIELDS(ENTROBOUND_PUT)
#undef ENTROBOUND_PUT
    return j;
}

namespace detail {

template <typename T>
bool is_negative(T v)
{
    if constexpr (std::is_signed_v<T>)
        return v < 0;
    else
        return false;
}

} // namespace detail

/// Missing keys keep their defaults; unknown keys are rejected.
inline SuiteConfig suite_config_from_json(const nlohmann::json& j)
{
    SuiteConfig c;
    if (!j.is_object())
        fail(ErrorKind::Parse, "suite config must be a JSON object");
    std::size_t known = 0;
#define ENTROBOUND_GET(name)                                                                                           \
    if (j.contains(#name)) {                                                                                           \
        j.at(#name).get_to(c.name);                                                                                    \
        ++known;                                                                                                       \
    }
    ENTROBOUND_SUITE_FIELDS(ENTROBOUND_GET)
#undef ENTROBOUND_GET
    if (known != j.size())
        fail(ErrorKind::Parse, "suite config has unknown keys");
    bool negative = false;
#define ENTROBOUND_NEG(name) negative = negative || detail::is_negative(c.name);
    ENTROBOUND_SUITE_FIELDS(ENTROBOUND_NEG)
#undef ENTROBOUND_NEG
    if (negative)
        fail(ErrorKind::InvalidParameter, "suite caps and trial counts must be non-negative");
    if (!(c.tolerance > 0.0))
        fail(ErrorKind::InvalidParameter, "tolerance must be positive");
    if (c.sah_max_side < 1 || c.sah_max_side > 8 || c.cover_chain_max_vertices < 2 || c.cover_chain_max_vertices > 16 ||
        c.zhao_sampled_vertices < 1 || c.zhao_sampled_vertices > 8 || c.zhao_exhaustive_max_vertices > 6)
        fail(ErrorKind::InvalidParameter, "suite size caps out of range");
    return c;
}

inline SuiteConfig empty_suite_config()
{
    SuiteConfig c;
    c.kahn_max_degree = c.kahn_max_copies = 0;
    c.sah_trials = c.sah_complete_max_side = 0;
    c.cover_chain_trials = 0;
    c.zhao_exhaustive_max_vertices = 0;
    c.zhao_sampled_count = 0;
    c.rich_max_degree = 0;
    c.cond_trials = c.shearer_trials = 0;
    c.walk_max_edges = c.walk_max_length = 0;
    c.walk_regular_max_degree = c.walk_regular_max_length = 0;
    return c;
}

namespace detail {

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(trial)};
    std::uint32_t out[2];
    seq.generate(out, out + 2);
    return (std::uint64_t{out[0]} << 32) | out[1];
}

inline std::string padded(std::uint64_t x, int width = 4)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%0*llu", width, static_cast<unsigned long long>(x));
    return buf;
}

inline std::string bipartite_id(const BipartiteGraph& g)
{
    std::string id = "b" + std::to_string(g.left_count()) + "x" + std::to_string(g.right_count());
    for (auto [u, v] : g.edges())
        id += "-" + std::to_string(u) + std::to_string(v);
    return id;
}

inline void attach_replay(BoundReport& r, const std::string& text)
{
    if (r.verdict == Verdict::Violated)
        r.metadata["replay"] = text;
}

inline std::string joint_pmf_text(const JointPmf& j)
{
    std::string out;
    for (const auto& [t, p] : j.atoms()) {
        for (auto x : t)
            out += std::to_string(x) + " ";
        out += number(p) + "\n";
    }
    return out;
}

inline void kahn_battery(const SuiteConfig& c, std::vector<BoundReport>& out)
{
    for (int d = 1; d <= c.kahn_max_degree; ++d)
        for (int copies = 1; copies <= c.kahn_max_copies; ++copies) {
            const auto g = disjoint_union(std::vector<BipartiteGraph>(static_cast<std::size_t>(copies), complete_bipartite(d, d)));
            const auto fast = count_independent_sets_bipartite(g);
            auto r = make_report("kahn", "K" + std::to_string(d) + "," + std::to_string(d) + "x" + std::to_string(copies),
                                 kahn_bound(g), fast.log_value, Sense::Upper, c.tolerance);
            r.metadata["exact_count"] = to_decimal(fast.value);
            if (g.vertex_count() <= 20) {
                const auto brute = count_independent_sets_bruteforce(g.as_graph());
                r.metadata["oracles_agree"] = brute.value == fast.value ? "true" : "false";
                if (brute.value != fast.value)
                    r.verdict = Verdict::Violated;
            }
            require_tight(r);
            attach_replay(r, serialize(g));
            out.push_back(std::move(r));
        }
}

inline void sah_battery(const SuiteConfig& c, std::vector<BoundReport>& out)
{
    for (int t = 0; t < c.sah_trials; ++t) {
        std::mt19937_64 rng(mix_seed(c.seed, 2, static_cast<std::uint64_t>(t)));
        const int m = 1 + index_draw(rng, c.sah_max_side);
        const int n = 1 + index_draw(rng, c.sah_max_side);
        const double p = unit_draw(rng);
        const auto g = attach_isolated_vertices(random_bipartite(m, n, p, rng()), rng());
        const auto brute = count_independent_sets_bruteforce(g.as_graph());
        const auto fast = count_independent_sets_bipartite(g);
        auto r = make_report("sah", "random-" + padded(static_cast<std::uint64_t>(t)), sah_bound(g), brute.log_value,
                             Sense::Upper, c.tolerance);
        r.metadata["exact_count"] = to_decimal(brute.value);
        r.metadata["oracles_agree"] = brute.value == fast.value ? "true" : "false";
        if (brute.value != fast.value)
            r.verdict = Verdict::Violated;
        attach_replay(r, serialize(g));
        out.push_back(std::move(r));
    }
    for (int a = 1; a <= c.sah_complete_max_side; ++a)
        for (int b = 1; b <= c.sah_complete_max_side; ++b) {
            const auto g = complete_bipartite(a, b);
            const auto exact = count_independent_sets_bruteforce(g.as_graph());
            auto r = make_report("sah", "K" + std::to_string(a) + "," + std::to_string(b), sah_bound(g),
                                 exact.log_value, Sense::Upper, c.tolerance);
            r.metadata["exact_count"] = to_decimal(exact.value);
            require_tight(r);
            attach_replay(r, serialize(g));
            out.push_back(std::move(r));
        }
}

inline void cover_chain_battery(const SuiteConfig& c, std::vector<BoundReport>& out)
{
    for (int t = 0; t < c.cover_chain_trials; ++t) {
        std::mt19937_64 rng(mix_seed(c.seed, 3, static_cast<std::uint64_t>(t)));
        const int n = 2 + index_draw(rng, std::max(1, c.cover_chain_max_vertices - 1));
        const auto g = attach_isolated_vertices(random_graph(n, unit_draw(rng), rng()), rng());
        auto r = make_report("sah-via-cover", "random-" + padded(static_cast<std::uint64_t>(t)),
                             sah_bound_general_via_cover(g), sah_bound(g), Sense::Upper, c.tolerance);
        require_tight(r);
        if (g.vertex_count() <= 16) {
            const auto exact = count_independent_sets_bruteforce(g);
            r.metadata["exact_log_count"] = number(exact.log_value);
            if (!holds_with_slack(exact.log_value, r.bound_log_nats, c.tolerance))
                r.verdict = Verdict::Violated;
        }
        attach_replay(r, serialize(g));
        out.push_back(std::move(r));
    }
}

inline BoundReport zhao_report(const Graph& g, const std::string& id, double tol)
{
    const auto check = zhao_check(g);
    const auto audit = zhao_audit(g);
    auto r = make_report("zhao", id, log_of(check.rhs), log_of(check.lhs), Sense::Upper, tol);
    r.verdict = !check.holds ? Verdict::Violated : (check.equal ? Verdict::Tight : Verdict::Holds);
    r.metadata["lhs"] = to_decimal(check.lhs);
    r.metadata["rhs"] = to_decimal(check.rhs);
    r.metadata["distinct_images"] = std::to_string(audit.distinct_images);
    r.metadata["round_trip_failures"] = std::to_string(audit.round_trip_failures);
    if (!audit.holds() || BigInt(audit.distinct_images) != check.lhs)
        r.verdict = Verdict::Violated;
    attach_replay(r, serialize(g));
    return r;
}

inline void zhao_battery(const SuiteConfig& c, std::vector<BoundReport>& out)
{
    for (int n = 1; n <= c.zhao_exhaustive_max_vertices; ++n) {
        std::uint64_t mask = 0;
        for (const auto& g : all_graphs(n))
            out.push_back(zhao_report(g, "n" + std::to_string(n) + "-" + padded(mask++, 5), c.tolerance));
    }
    if (c.zhao_sampled_count > 0) {
        const int n = c.zhao_sampled_vertices;
        std::mt19937_64 rng(mix_seed(c.seed, 4, 0));
        const int pairs = pair_count(n);
        for (int s = 0; s < c.zhao_sampled_count; ++s) {
            const std::uint64_t mask = pairs >= 64 ? rng() : rng() & ((std::uint64_t{1} << pairs) - 1);
            out.push_back(zhao_report(graph_from_pair_mask(n, mask),
                                      "n" + std::to_string(n) + "-sample-" + padded(static_cast<std::uint64_t>(s)),
                                      c.tolerance));
        }
    }
}

inline BoundReport coloring_entropy_report(const BipartiteGraph& g, const EdgeColoring& col, const std::string& id,
                                           double tol)
{
    const auto j = coloring_to_joint_pmf(g, col);
    const auto chk = conditional_inequality_check(j, Roles{0, 1, 2}, tol);
    auto r = make_report("cond-coloring", id, chk.rhs, chk.lhs, Sense::Upper, tol);
    r.metadata["m"] = std::to_string(chk.m);
    const auto rich = coloring_richness(g, col);
    r.metadata["coloring_richness"] = std::to_string(rich.m);
    if (chk.m > rich.m)
        r.verdict = Verdict::Violated;
    attach_replay(r, serialize(g) + "# coloring\n" + serialize_coloring(g, col));
    return r;
}

inline void rich_battery(const SuiteConfig& c, std::vector<BoundReport>& out)
{
    for (int d = 1; d <= c.rich_max_degree; ++d) {
        const auto g = complete_bipartite(d, d);
        const std::string base = "K" + std::to_string(d) + "," + std::to_string(d);

        const auto konig = proper_edge_color_bipartite(g);
        {
            auto r = make_report("konig", base, std::log(static_cast<double>(g.max_degree())),
                                 std::log(static_cast<double>(konig.color_count())), Sense::Lower, c.tolerance);
            if (!verify_proper(g, konig))
                r.verdict = Verdict::Violated;
            require_tight(r);
            out.push_back(std::move(r));
        }
        out.push_back(coloring_entropy_report(g, konig, base + "-konig", c.tolerance));

        for (int m = 1; m <= d; ++m) {
            const auto res = min_colors_rich(g, m, static_cast<int>(g.edge_count()));
            const std::string id = base + "-m" + std::to_string(m);
            std::optional<double> exact;
            if (res.colors)
                exact = std::log(static_cast<double>(*res.colors));
            auto r = make_report("rich-coloring", id, std::log(static_cast<double>(res.bound.colors)), exact,
                                 Sense::Lower, c.tolerance);
            r.metadata["bound_raw"] = number(res.bound.raw);
            r.metadata["bound_colors"] = std::to_string(res.bound.colors);
            r.metadata["colors"] = res.colors ? std::to_string(*res.colors) : "unknown";
            if (res.witness) {
                const bool proper = verify_proper(g, *res.witness);
                const int rich = coloring_richness(g, *res.witness).m;
                r.metadata["witness_richness"] = std::to_string(rich);
                if (!proper || rich > m)
                    r.verdict = Verdict::Violated;
                if (m < d && *res.colors <= d)
                    r.verdict = Verdict::Violated;
                out.push_back(coloring_entropy_report(g, *res.witness, id, c.tolerance));
            }
            out.push_back(std::move(r));
        }
    }
}

inline void cond_battery(const SuiteConfig& c, std::vector<BoundReport>& out)
{
    for (int t = 0; t < c.cond_trials; ++t) {
        std::mt19937_64 rng(mix_seed(c.seed, 5, static_cast<std::uint64_t>(t)));
        const auto j = random_joint_pmf(rng, 3, 4, 0.2 + 0.6 * unit_draw(rng));
        const auto chk = conditional_inequality_check(j, Roles{0, 1, 2}, c.tolerance);
        auto r = make_report("cond-ineq", "random-" + padded(static_cast<std::uint64_t>(t)), chk.rhs, chk.lhs,
                             Sense::Upper, c.tolerance);
        r.metadata["m"] = std::to_string(chk.m);
        if (chk.single_rich) {
            r.metadata["single_rich"] = "true";
            if (!holds_with_slack(chk.lhs, chk.h_a, c.tolerance))
                r.verdict = Verdict::Violated;
        }
        attach_replay(r, joint_pmf_text(j));
        out.push_back(std::move(r));
    }
}

inline void shearer_battery(const SuiteConfig& c, std::vector<BoundReport>& out)
{
    for (int t = 0; t < c.shearer_trials; ++t) {
        std::mt19937_64 rng(mix_seed(c.seed, 6, static_cast<std::uint64_t>(t)));
        const std::size_t n = 1 + static_cast<std::size_t>(index_draw(rng, 4));
        const auto j = random_joint_pmf(rng, n, 3, 0.5 * unit_draw(rng));
        const auto family = random_cover_family(rng, n);
        const auto raw = shearer_check(j, family, c.tolerance);
        const auto pre = shearer_check(j, family.clipped(n), c.tolerance);
        auto r = make_report("shearer", "random-" + padded(static_cast<std::uint64_t>(t)), raw.rhs, raw.lhs,
                             Sense::Upper, c.tolerance);
        r.metadata["k"] = std::to_string(family.multiplicity);
        const bool agree = raw.lhs == pre.lhs && raw.rhs == pre.rhs && raw.holds == pre.holds;
        r.metadata["clipped_agrees"] = agree ? "true" : "false";
        if (!agree || !raw.holds)
            r.verdict = Verdict::Violated;
        attach_replay(r, joint_pmf_text(j));
        out.push_back(std::move(r));
    }
}

inline void walk_battery(const SuiteConfig& c, std::vector<BoundReport>& out)
{
    auto corpus = connected_bipartite_graphs(c.walk_max_edges);
    for (const auto& g : corpus) {
        const std::string id = bipartite_id(g);
        for (int k = 1; k <= c.walk_max_length; ++k) {
            const auto census = walk_census(g, k);
            const auto b = walk_bounds(g, k);
            const double directed = log_of(census.directed);
            auto r1 = make_report("walk-lb1", id + "-k" + std::to_string(k), b.lb1, directed, Sense::Lower, c.tolerance);
            r1.metadata["directed"] = to_decimal(census.directed);
            r1.metadata["undirected"] = to_decimal(census.undirected);
            auto r2 = make_report("walk-lb2", id + "-k" + std::to_string(k), b.lb2, b.lb1, Sense::Lower, c.tolerance);
            attach_replay(r1, serialize(g));
            attach_replay(r2, serialize(g));
            out.push_back(std::move(r1));
            out.push_back(std::move(r2));

            if (k % 2 == 1 && k <= kChainMaxLength && g.edge_count() <= kChainMaxEdges) {
                const auto a = chain_entropy_audit(g, k, c.tolerance);
                auto r = make_report("chain-entropy", id + "-k" + std::to_string(k), a.closed_form, a.direct_entropy,
                                     Sense::Upper, c.tolerance);
                require_tight(r);
                if (!a.holds())
                    r.verdict = Verdict::Violated;
                r.metadata["support"] = std::to_string(a.support_size);
                r.metadata["support_equals_undirected"] = a.support_equals_undirected ? "true" : "false";
                attach_replay(r, serialize(g));
                out.push_back(std::move(r));
            }
        }
    }
    for (int d = 1; d <= c.walk_regular_max_degree; ++d) {
        const auto g = complete_bipartite(d, d);
        for (int k = 1; k <= c.walk_regular_max_length; k += 2) {
            const auto census = walk_census(g, k);
            const auto b = walk_bounds(g, k);
            const std::string id = "K" + std::to_string(d) + "," + std::to_string(d) + "-k" + std::to_string(k);
            auto r = make_report("walk-regular", id, b.lb1, log_of(census.undirected), Sense::Lower, c.tolerance);
            require_tight(r);
            const BigInt closed = BigInt(g.edge_count()) * boost::multiprecision::pow(BigInt(d * d), static_cast<unsigned>((k - 1) / 2));
            r.metadata["undirected"] = to_decimal(census.undirected);
            r.metadata["closed_form"] = to_decimal(closed);
            if (closed != census.undirected || !close_with_slack(b.lb1, b.lb2, c.tolerance))
                r.verdict = Verdict::Violated;
            out.push_back(std::move(r));

            if (k <= kChainMaxLength && g.edge_count() <= kChainMaxEdges) {
                const auto a = chain_entropy_audit(g, k, c.tolerance);
                auto rc = make_report("chain-entropy", id, a.closed_form, a.direct_entropy, Sense::Upper, c.tolerance);
                require_tight(rc);
                if (!a.holds())
                    rc.verdict = Verdict::Violated;
                rc.metadata["support"] = std::to_string(a.support_size);
                out.push_back(std::move(rc));
            }
        }
    }
}

} // namespace detail

inline std::vector<BoundReport> run_suite(const SuiteConfig& config)
{
    std::vector<BoundReport> out;
    detail::kahn_battery(config, out);
    detail::sah_battery(config, out);
    detail::cover_chain_battery(config, out);
    detail::zhao_battery(config, out);
    detail::rich_battery(config, out);
    detail::cond_battery(config, out);
    detail::shearer_battery(config, out);
    detail::walk_battery(config, out);
    sort_reports(out);
    return out;
}

} // namespace entrobound
