// entrobound: command-line front end for the bound checkers.
//
// Exit codes: 0 when every verdict holds or is tight, 2 when any verdict is
// violated, 1 on usage or I/O errors.

#include <entrobound/corpus.hpp>
#include <entrobound/edge_coloring.hpp>
#include <entrobound/entropy.hpp>
#include <entrobound/indep_sets.hpp>
#include <entrobound/io.hpp>
#include <entrobound/report.hpp>
#include <entrobound/suite.hpp>
#include <entrobound/walks.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace entrobound;

namespace {

struct GlobalOptions {
    std::uint64_t seed = 1;
    std::string format = "json";
    double tolerance = kInequalitySlack;
    std::string out = "-";
};

int finish(const std::vector<BoundReport>& reports, const GlobalOptions& opts)
{
    emit(reports, parse_format(opts.format), opts.out);
    return any_violated(reports) ? 2 : 0;
}

void print_json(const nlohmann::ordered_json& j, const GlobalOptions& opts)
{
    const std::string text = j.dump(2) + "\n";
    if (opts.out == "-")
        std::cout << text;
    else
        write_file(opts.out, text);
}

std::optional<IndSetCount> exact_count(const AnyGraph& g, std::string& method)
{
    if (const auto* b = std::get_if<BipartiteGraph>(&g)) {
        if (std::min(b->left_count(), b->right_count()) <= kMeetInMiddleMaxSide) {
            method = "meet-in-the-middle";
            return count_independent_sets_bipartite(*b);
        }
        return std::nullopt;
    }
    const auto& plain = std::get<Graph>(g);
    if (plain.vertex_count() <= kBruteForceMaxVertices) {
        method = "brute-force";
        return count_independent_sets_bruteforce(plain);
    }
    return std::nullopt;
}

std::string graph_label(const std::string& path) { return std::filesystem::path(path).filename().string(); }

int run_count(const std::string& file, const GlobalOptions& opts)
{
    const auto g = load_graph(file);
    std::string method;
    const auto count = exact_count(g, method);
    if (!count)
        fail(ErrorKind::TooLarge, "graph exceeds the exact counting limits");
    nlohmann::ordered_json j;
    j["graph_id"] = graph_label(file);
    j["count"] = to_decimal(count->value);
    j["log_nats"] = count->log_value;
    j["method"] = method;
    if (const auto* b = std::get_if<BipartiteGraph>(&g); b && b->vertex_count() <= 24) {
        const auto brute = count_independent_sets_bruteforce(b->as_graph());
        j["brute_force_agrees"] = brute.value == count->value;
        if (brute.value != count->value) {
            print_json(j, opts);
            return 2;
        }
    }
    print_json(j, opts);
    return 0;
}

int run_bound(const std::string& kind, const std::string& file, const GlobalOptions& opts)
{
    const auto g = load_graph(file);
    double bound = 0.0;
    if (kind == "kahn") {
        const auto* b = std::get_if<BipartiteGraph>(&g);
        if (!b)
            fail(ErrorKind::InvalidInput, "the Kahn bound needs a bipartite graph file");
        bound = kahn_bound(*b);
    }
    else if (kind == "sah")
        bound = std::visit([](const auto& x) { return sah_bound(x); }, g);
    else
        fail(ErrorKind::InvalidParameter, "unknown bound kind '" + kind + "'");

    std::string method;
    const auto count = exact_count(g, method);
    auto r = make_report(kind, graph_label(file), bound,
                         count ? std::optional<double>(count->log_value) : std::nullopt, Sense::Upper, opts.tolerance);
    if (count) {
        r.metadata["exact_count"] = to_decimal(count->value);
        r.metadata["method"] = method;
    }
    if (r.verdict == Verdict::Violated)
        r.metadata["replay"] = serialize(g);
    return finish({r}, opts);
}

int run_zhao(int audit_max, const std::string& file, const GlobalOptions& opts)
{
    std::vector<BoundReport> reports;
    if (!file.empty()) {
        const auto g = load_graph(file);
        const auto* plain = std::get_if<Graph>(&g);
        if (!plain)
            fail(ErrorKind::InvalidInput, "zhao expects a general graph file");
        reports.push_back(detail::zhao_report(*plain, graph_label(file), opts.tolerance));
    }
    if (audit_max > 6)
        fail(ErrorKind::TooLarge, "exhaustive audit limited to 6 vertices");
    for (int n = 1; n <= audit_max; ++n) {
        std::uint64_t mask = 0;
        for (const auto& g : all_graphs(n))
            reports.push_back(detail::zhao_report(g, "n" + std::to_string(n) + "-" + detail::padded(mask++, 5),
                                                  opts.tolerance));
    }
    if (reports.empty())
        fail(ErrorKind::InvalidParameter, "give a graph file or --audit <maxN>");
    return finish(reports, opts);
}

int run_color(int m, int budget, const std::string& file, const std::string& witness_path, const GlobalOptions& opts)
{
    const auto g = load_graph(file);
    const auto* b = std::get_if<BipartiteGraph>(&g);
    if (!b)
        fail(ErrorKind::InvalidInput, "colouring needs a bipartite graph file");
    if (budget <= 0)
        budget = static_cast<int>(b->edge_count());
    const auto res = min_colors_rich(*b, m, budget);
    std::optional<double> exact;
    if (res.colors)
        exact = std::log(static_cast<double>(*res.colors));
    auto r = make_report("rich-coloring", graph_label(file), std::log(static_cast<double>(res.bound.colors)), exact,
                         Sense::Lower, opts.tolerance);
    r.metadata["m"] = std::to_string(m);
    r.metadata["bound_raw"] = detail::number(res.bound.raw);
    r.metadata["bound_colors"] = std::to_string(res.bound.colors);
    r.metadata["colors"] = res.colors ? std::to_string(*res.colors) : "unknown";
    r.metadata["search_nodes"] = std::to_string(res.nodes);
    std::vector<BoundReport> reports;
    if (res.witness) {
        const std::string text = serialize_coloring(*b, *res.witness);
        r.metadata["witness"] = text;
        if (!verify_proper(*b, *res.witness) || coloring_richness(*b, *res.witness).m > m)
            r.verdict = Verdict::Violated;
        if (!witness_path.empty())
            write_file(witness_path, text);
        reports.push_back(detail::coloring_entropy_report(*b, *res.witness, graph_label(file), opts.tolerance));
    }
    if (r.verdict == Verdict::Violated)
        r.metadata["replay"] = serialize(g);
    reports.insert(reports.begin(), r);
    return finish(reports, opts);
}

int run_walks(int k, const std::string& file, const GlobalOptions& opts)
{
    const auto g = load_graph(file);
    const auto* b = std::get_if<BipartiteGraph>(&g);
    if (!b)
        fail(ErrorKind::InvalidInput, "walk census needs a bipartite graph file");
    const auto census = walk_census(*b, k);
    const auto bounds = walk_bounds(*b, k);
    const double directed = log_of(census.directed), undirected = log_of(census.undirected);
    nlohmann::ordered_json j;
    j["k"] = k;
    j["directed"] = to_decimal(census.directed);
    j["undirected"] = to_decimal(census.undirected);
    j["lb1_nats"] = bounds.lb1;
    j["lb2_nats"] = bounds.lb2;
    j["equality_flags"] = {
        {"undirected_equals_lb1", close_with_slack(undirected, bounds.lb1, opts.tolerance)},
        {"undirected_equals_lb2", close_with_slack(undirected, bounds.lb2, opts.tolerance)},
        {"directed_equals_lb1", close_with_slack(directed, bounds.lb1, opts.tolerance)},
        {"directed_equals_lb2", close_with_slack(directed, bounds.lb2, opts.tolerance)},
        {"lb1_equals_lb2", close_with_slack(bounds.lb1, bounds.lb2, opts.tolerance)},
    };
    const bool valid = holds_with_slack(bounds.lb1, directed, opts.tolerance) &&
                       holds_with_slack(bounds.lb2, bounds.lb1, opts.tolerance);
    j["bounds_hold_against_directed"] = valid;
    print_json(j, opts);
    return valid ? 0 : 2;
}

int run_check_shearer(const std::string& file, const std::string& family_file, int k, const GlobalOptions& opts)
{
    const auto labeled = parse_joint_pmf(read_file(file));
    const auto family = parse_cover_family(read_file(family_file), k);
    const auto res = shearer_check(labeled.pmf, family, opts.tolerance);
    auto r = make_report("shearer", graph_label(file), res.rhs, res.lhs, Sense::Upper, opts.tolerance);
    r.metadata["k"] = std::to_string(k);
    r.metadata["holds"] = res.holds ? "true" : "false";
    if (!res.holds)
        r.verdict = Verdict::Violated;
    return finish({r}, opts);
}

int run_check_cond(const std::string& file, const std::vector<std::size_t>& roles, const GlobalOptions& opts)
{
    if (roles.size() != 3)
        fail(ErrorKind::InvalidParameter, "--roles takes three coordinates a,x,y");
    const auto labeled = parse_joint_pmf(read_file(file));
    const Roles r3{roles[0], roles[1], roles[2]};
    const auto res = conditional_inequality_check(labeled.pmf, r3, opts.tolerance);
    const auto rich = richness(labeled.pmf, r3);
    auto r = make_report("cond-ineq", graph_label(file), res.rhs, res.lhs, Sense::Upper, opts.tolerance);
    r.metadata["m"] = std::to_string(res.m);
    r.metadata["argmax_x"] = labeled.label(r3.x, rich.x);
    r.metadata["argmax_y"] = labeled.label(r3.y, rich.y);
    r.metadata["h_a"] = detail::number(res.h_a);
    r.metadata["slack"] = detail::number(res.slack);
    if (res.single_rich && !holds_with_slack(res.lhs, res.h_a, opts.tolerance))
        r.verdict = Verdict::Violated;
    return finish({r}, opts);
}

int run_suite_command(const std::string& config_path, bool dump_config, const std::string& replay_dir,
                      GlobalOptions opts, bool seed_given, bool tolerance_given)
{
    SuiteConfig config;
    if (!config_path.empty())
        config = suite_config_from_json(nlohmann::json::parse(read_file(config_path)));
    if (seed_given)
        config.seed = opts.seed;
    if (tolerance_given)
        config.tolerance = opts.tolerance;
    if (dump_config) {
        print_json(to_json(config), opts);
        return 0;
    }
    const auto reports = run_suite(config);
    if (!replay_dir.empty()) {
        std::filesystem::create_directories(replay_dir);
        int n = 0;
        for (const auto& r : reports)
            if (r.verdict == Verdict::Violated) {
                const std::string stem = replay_dir + "/violation-" + std::to_string(n++);
                write_file(stem + ".txt", r.metadata.count("replay") ? r.metadata.at("replay") : std::string());
                write_file(stem + ".json", to_json(r).dump(2) + "\n" + to_json(config).dump(2) + "\n");
            }
    }
    return finish(reports, opts);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Entropy-bound checkers for independent sets, rich edge colourings and walks"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions opts;
    auto* seed_opt = app.add_option("--seed", opts.seed, "Seed for generated corpora")->capture_default_str();
    app.add_option("--format", opts.format, "Report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    auto* tol_opt = app.add_option("--tolerance", opts.tolerance, "Relative slack for verdicts")
                        ->check(CLI::PositiveNumber)
                        ->capture_default_str();
    app.add_option("--out", opts.out, "Output path, - for stdout")->capture_default_str();

    std::string file;

    auto* count = app.add_subcommand("count", "Exact number of independent sets");
    count->add_option("file", file, "Graph file")->required();

    std::string kind;
    auto* bound = app.add_subcommand("bound", "Independent-set upper bound with its exact oracle");
    bound->add_option("--kind", kind, "kahn or sah")->required()->check(CLI::IsMember({"kahn", "sah"}));
    bound->add_option("file", file, "Graph file")->required();

    int audit_max = 0;
    auto* zhao = app.add_subcommand("zhao", "Zhao inequality and its injection");
    zhao->add_option("--audit", audit_max, "Audit every graph on up to this many vertices");
    zhao->add_option("file", file, "Graph file");

    int rich = 1, budget = 0;
    std::string witness;
    auto* color = app.add_subcommand("color", "Fewest colours under a richness cap");
    color->add_option("--rich", rich, "Richness cap m")->required()->check(CLI::PositiveNumber);
    color->add_option("--budget", budget, "Largest palette to try (default: number of edges)");
    color->add_option("--witness", witness, "Write the witness colouring here");
    color->add_option("file", file, "Bipartite graph file")->required();

    int k = 1;
    auto* walks = app.add_subcommand("walks", "Walk census and entropy lower bounds");
    walks->add_option("-k", k, "Walk length")->required()->check(CLI::PositiveNumber);
    walks->add_option("file", file, "Bipartite graph file")->required();

    std::string family;
    int multiplicity = 1;
    auto* shearer = app.add_subcommand("check-shearer", "Shearer's lemma on a joint pmf");
    shearer->add_option("file", file, "Joint pmf file")->required();
    shearer->add_option("--family", family, "Cover family file")->required();
    shearer->add_option("-k", multiplicity, "Cover multiplicity")->check(CLI::PositiveNumber);

    std::vector<std::size_t> roles{0, 1, 2};
    auto* cond = app.add_subcommand("check-cond", "H(A|X) + H(A|Y) <= H(A) + ln m on a joint pmf");
    cond->add_option("file", file, "Joint pmf file")->required();
    cond->add_option("--roles", roles, "Coordinates of A, X, Y")->delimiter(',')->expected(3);

    std::string config_path, replay_dir;
    bool dump_config = false;
    auto* suite = app.add_subcommand("suite", "Full audit battery");
    suite->add_option("--config", config_path, "Suite config JSON");
    suite->add_flag("--dump-config", dump_config, "Print the effective config and exit");
    suite->add_option("--replay-dir", replay_dir, "Write replay bundles for violations here");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*count)
            return run_count(file, opts);
        if (*bound)
            return run_bound(kind, file, opts);
        if (*zhao)
            return run_zhao(audit_max, file, opts);
        if (*color)
            return run_color(rich, budget, file, witness, opts);
        if (*walks)
            return run_walks(k, file, opts);
        if (*shearer)
            return run_check_shearer(file, family, multiplicity, opts);
        if (*cond)
            return run_check_cond(file, roles, opts);
        if (*suite)
            return run_suite_command(config_path, dump_config, replay_dir, opts, seed_opt->count() > 0,
                                     tol_opt->count() > 0);
    }
    catch (const Error& e) {
        std::cerr << "entrobound: " << e.what() << "\n";
        return 1;
    }
    catch (const std::exception& e) {
        std::cerr << "entrobound: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
