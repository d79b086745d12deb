#pragma once

// Text formats.
//
// Graph files: first line `graph <n>` or `bipartite <m> <n>`, then one
// `<u> <v>` per line (for bipartite files u is a left index and v a right
// index). Lines starting with `#` and blank lines are ignored. serialize()
// writes the header and the sorted edge list with no comments, so parsing and
// re-serializing a serialized file is byte-identical.
//
// Joint PMF files: `<label_1> ... <label_n> <probability>` per line, labels
// are opaque tokens. Cover family files: one subset per line as coordinate
// indices. Colouring witnesses: `<u> <v> <color>` per line.

#include <entrobound/edge_coloring.hpp>
#include <entrobound/entropy.hpp>
#include <entrobound/error.hpp>
#include <entrobound/graph.hpp>
#include <entrobound/pmf.hpp>

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace entrobound {

using AnyGraph = std::variant<Graph, BipartiteGraph>;

namespace detail {

inline std::vector<std::string> tokens(std::string_view line)
{
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            out.emplace_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

template <typename Int>
Int parse_int(const std::string& s, std::size_t line_no)
{
    Int value{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        fail(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected an integer, got '" + s + "'");
    return value;
}

inline double parse_double(const std::string& s, std::size_t line_no)
{
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(s, &used);
    }
    catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty())
        fail(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected a number, got '" + s + "'");
    return value;
}

/// Non-comment, non-blank lines with their 1-based line numbers.
inline std::vector<std::pair<std::size_t, std::vector<std::string>>> content_lines(std::string_view text)
{
    std::vector<std::pair<std::size_t, std::vector<std::string>>> out;
    std::size_t line_no = 0, start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        ++line_no;
        std::string_view line = text.substr(start, end - start);
        auto first = line.find_first_not_of(" \t\r");
        if (first != std::string_view::npos && line[first] != '#')
            out.emplace_back(line_no, tokens(line));
        if (end == text.size())
            break;
        start = end + 1;
    }
    return out;
}

} // namespace detail

inline AnyGraph parse_graph(std::string_view text)
{
    const auto lines = detail::content_lines(text);
    if (lines.empty())
        fail(ErrorKind::Parse, "missing graph header");
    const auto& [hline, header] = lines.front();
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [no, tok] = lines[i];
        if (tok.size() != 2)
            fail(ErrorKind::Parse, "line " + std::to_string(no) + ": expected '<u> <v>'");
        edges.emplace_back(detail::parse_int<int>(tok[0], no), detail::parse_int<int>(tok[1], no));
    }
    if (header.size() == 2 && header[0] == "graph")
        return Graph(detail::parse_int<int>(header[1], hline), std::move(edges));
    if (header.size() == 3 && header[0] == "bipartite")
        return BipartiteGraph(detail::parse_int<int>(header[1], hline), detail::parse_int<int>(header[2], hline),
                              std::move(edges));
    fail(ErrorKind::Parse, "line " + std::to_string(hline) + ": expected 'graph <n>' or 'bipartite <m> <n>'");
}

inline std::string serialize(const Graph& g)
{
    std::string out = "graph " + std::to_string(g.vertex_count()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

inline std::string serialize(const BipartiteGraph& g)
{
    std::string out = "bipartite " + std::to_string(g.left_count()) + " " + std::to_string(g.right_count()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

inline std::string serialize(const AnyGraph& g)
{
    return std::visit([](const auto& x) { return serialize(x); }, g);
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(ErrorKind::Io, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, std::string_view content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        fail(ErrorKind::Io, "cannot write " + path);
    out << content;
    if (!out)
        fail(ErrorKind::Io, "write failed for " + path);
}

inline AnyGraph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

/// JointPmf plus the token behind each integer outcome code, per coordinate.
struct LabeledJointPmf {
    JointPmf pmf{0, {{Tuple{}, 1.0}}};
    std::vector<std::vector<std::string>> labels;

    const std::string& label(std::size_t coord, Outcome code) const
    {
        return labels.at(coord).at(static_cast<std::size_t>(code));
    }
};

inline LabeledJointPmf parse_joint_pmf(std::string_view text)
{
    const auto lines = detail::content_lines(text);
    if (lines.empty())
        fail(ErrorKind::Parse, "joint pmf file has no atoms");
    const std::size_t width = lines.front().second.size();
    if (width < 2)
        fail(ErrorKind::Parse, "joint pmf lines need at least one label and a probability");
    const std::size_t n = width - 1;

    std::vector<std::unordered_map<std::string, Outcome>> codes(n);
    LabeledJointPmf out;
    out.labels.assign(n, {});
    std::vector<std::pair<Tuple, double>> rows;
    for (const auto& [no, tok] : lines) {
        if (tok.size() != width)
            fail(ErrorKind::Parse, "line " + std::to_string(no) + ": expected " + std::to_string(n) +
                                       " labels and a probability");
        Tuple t(n);
        for (std::size_t i = 0; i < n; ++i) {
            auto [it, fresh] = codes[i].try_emplace(tok[i], static_cast<Outcome>(out.labels[i].size()));
            if (fresh)
                out.labels[i].push_back(tok[i]);
            t[i] = it->second;
        }
        rows.emplace_back(std::move(t), detail::parse_double(tok[n], no));
    }
    out.pmf = JointPmf::from_samples(n, rows);
    return out;
}

/// One subset per content line; `-` stands for the empty subset.
inline CoverFamily parse_cover_family(std::string_view text, int multiplicity)
{
    CoverFamily family{{}, multiplicity};
    for (const auto& [no, tok] : detail::content_lines(text)) {
        std::vector<long> subset;
        for (const auto& t : tok)
            if (t != "-")
                subset.push_back(detail::parse_int<long>(t, no));
        family.subsets.push_back(std::move(subset));
    }
    return family;
}

inline std::string serialize_coloring(const BipartiteGraph& g, const EdgeColoring& c)
{
    std::string out;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        out += std::to_string(u) + " " + std::to_string(v) + " " + std::to_string(c[e]) + "\n";
    }
    return out;
}

inline EdgeColoring parse_coloring(const BipartiteGraph& g, std::string_view text)
{
    std::vector<std::tuple<int, int, int>> triples;
    for (const auto& [no, tok] : detail::content_lines(text)) {
        if (tok.size() != 3)
            fail(ErrorKind::Parse, "line " + std::to_string(no) + ": expected '<u> <v> <color>'");
        triples.emplace_back(detail::parse_int<int>(tok[0], no), detail::parse_int<int>(tok[1], no),
                             detail::parse_int<int>(tok[2], no));
    }
    return EdgeColoring::from_triples(g, triples);
}

} // namespace entrobound
