#pragma once

// BoundReport records and their JSON / CSV renderings.

#include <entrobound/error.hpp>
#include <entrobound/pmf.hpp>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace entrobound {

enum class Verdict { Holds, Tight, Violated, OracleSkipped };

inline const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Tight: return "tight";
    case Verdict::Violated: return "violated";
    case Verdict::OracleSkipped: return "oracle-skipped";
    }
    return "unknown";
}

/// Upper: the exact quantity must not exceed the bound. Lower: it must not
/// fall below it.
enum class Sense { Upper, Lower };

struct BoundReport {
    std::string bound_name;
    std::string graph_id;
    double bound_log_nats = 0.0;
    std::optional<double> exact_log_nats;
    Verdict verdict = Verdict::OracleSkipped;
    std::map<std::string, std::string> metadata;

    double display_bits() const { return bound_log_nats / std::log(2.0); }
};

inline Verdict judge(double bound, std::optional<double> exact, Sense sense, double tol = kInequalitySlack)
{
    if (!exact)
        return Verdict::OracleSkipped;
    if (std::abs(bound - *exact) <= tol * std::max(1.0, std::abs(bound)))
        return Verdict::Tight;
    const bool ok = sense == Sense::Upper ? holds_with_slack(*exact, bound, tol) : holds_with_slack(bound, *exact, tol);
    return ok ? Verdict::Holds : Verdict::Violated;
}

inline BoundReport make_report(std::string name, std::string id, double bound, std::optional<double> exact, Sense sense,
                               double tol = kInequalitySlack)
{
    BoundReport r;
    r.bound_name = std::move(name);
    r.graph_id = std::move(id);
    r.bound_log_nats = bound;
    r.exact_log_nats = exact;
    r.verdict = judge(bound, exact, sense, tol);
    return r;
}

/// Marks a report violated when a claimed equality did not come out tight.
inline void require_tight(BoundReport& r)
{
    r.metadata["expected"] = "tight";
    if (r.verdict != Verdict::Tight)
        r.verdict = Verdict::Violated;
}

inline void sort_reports(std::vector<BoundReport>& reports)
{
    std::stable_sort(reports.begin(), reports.end(), [](const BoundReport& a, const BoundReport& b) {
        return std::tie(a.bound_name, a.graph_id) < std::tie(b.bound_name, b.graph_id);
    });
}

inline bool any_violated(const std::vector<BoundReport>& reports)
{
    return std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.verdict == Verdict::Violated; });
}

enum class Format { Json, Csv };

inline Format parse_format(const std::string& token)
{
    if (token == "json")
        return Format::Json;
    if (token == "csv")
        return Format::Csv;
    fail(ErrorKind::InvalidParameter, "unknown format '" + token + "'");
}

inline nlohmann::ordered_json to_json(const BoundReport& r)
{
    nlohmann::ordered_json j;
    j["bound_name"] = r.bound_name;
    j["graph_id"] = r.graph_id;
    j["bound_log_nats"] = r.bound_log_nats;
    if (r.exact_log_nats)
        j["exact_log_nats"] = *r.exact_log_nats;
    else
        j["exact_log_nats"] = nullptr;
    j["display_bits"] = r.display_bits();
    j["verdict"] = to_string(r.verdict);
    j["metadata"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.metadata)
        j["metadata"][k] = v;
    return j;
}

inline constexpr const char* kCsvHeader = "bound_name,graph_id,bound_log_nats,exact_log_nats,display_bits,verdict,metadata";

namespace detail {

inline std::string number(double x)
{
    if (!std::isfinite(x))
        return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace detail

inline std::string render(const std::vector<BoundReport>& reports, Format format)
{
    if (format == Format::Json) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : reports)
            arr.push_back(to_json(r));
        return arr.dump(2) + "\n";
    }
    std::string out = std::string(kCsvHeader) + "\n";
    for (const auto& r : reports) {
        std::string meta;
        for (const auto& [k, v] : r.metadata) {
            if (!meta.empty())
                meta += ';';
            meta += k + "=" + v;
        }
        out += detail::csv_field(r.bound_name) + "," + detail::csv_field(r.graph_id) + "," +
               detail::number(r.bound_log_nats) + "," +
               (r.exact_log_nats ? detail::number(*r.exact_log_nats) : std::string()) + "," +
               detail::number(r.display_bits()) + "," + to_string(r.verdict) + "," + detail::csv_field(meta) + "\n";
    }
    return out;
}

/// Writes to `destination`, or to stdout when it is "-".
inline void emit(const std::vector<BoundReport>& reports, Format format, const std::string& destination)
{
    const std::string text = render(reports, format);
    if (destination == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(destination, std::ios::binary);
    if (!out)
        fail(ErrorKind::Io, "cannot write " + destination);
    out << text;
    if (!out)
        fail(ErrorKind::Io, "write failed for " + destination);
}

} // namespace entrobound
