#pragma once

#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "wfr/errors.hpp"
#include "wfr/harness.hpp"

namespace wfr::bench {

enum class table_format { csv, markdown, json };

inline table_format parse_format(std::string_view s) {
    if (s == "csv") return table_format::csv;
    if (s == "markdown" || s == "md") return table_format::markdown;
    if (s == "json") return table_format::json;
    throw config_error("unknown table format: " + std::string(s));
}

namespace detail {

// Shortest representation that round-trips.
inline std::string exact(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

inline std::string fixed2(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
    return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

template <class Row>
void require_rows(const std::vector<Row>& rows) {
    if (rows.empty()) throw config_error("nothing to emit: no rows");
}

inline std::string markdown_header(const std::vector<std::size_t>& ms) {
    std::string out = "| m |";
    for (auto m : ms) out += " " + std::to_string(m) + " |";
    out += "\n|---|";
    for (std::size_t i = 0; i < ms.size(); ++i) out += "---|";
    out += "\n";
    return out;
}

template <class Row>
std::vector<std::size_t> lengths_of(const std::vector<Row>& rows) {
    std::vector<std::size_t> ms;
    for (const auto& c : rows.front().cells) ms.push_back(c.m);
    return ms;
}

}  // namespace detail

inline void to_json(nlohmann::json& j, const bench_cell& c) {
    j = {{"m", c.m},
         {"mean_ms", c.mean_ms},
         {"verifications", c.verifications},
         {"occurrences", c.occurrences},
         {"mean_shift", c.mean_shift}};
}
inline void from_json(const nlohmann::json& j, bench_cell& c) {
    j.at("m").get_to(c.m);
    j.at("mean_ms").get_to(c.mean_ms);
    j.at("verifications").get_to(c.verifications);
    j.at("occurrences").get_to(c.occurrences);
    j.at("mean_shift").get_to(c.mean_shift);
}
inline void to_json(nlohmann::json& j, const bench_row& r) {
    j = {{"algo", r.algo}, {"cells", r.cells}};
}
inline void from_json(const nlohmann::json& j, bench_row& r) {
    j.at("algo").get_to(r.algo);
    j.at("cells").get_to(r.cells);
}
inline void to_json(nlohmann::json& j, const stats_cell& c) {
    j = {{"m", c.m}, {"alpha_hat", c.alpha_hat}, {"beta_hat", c.beta_hat}};
}
inline void from_json(const nlohmann::json& j, stats_cell& c) {
    j.at("m").get_to(c.m);
    j.at("alpha_hat").get_to(c.alpha_hat);
    j.at("beta_hat").get_to(c.beta_hat);
}
inline void to_json(nlohmann::json& j, const stats_row& r) {
    j = {{"corpus", r.corpus}, {"cells", r.cells}};
}
inline void from_json(const nlohmann::json& j, stats_row& r) {
    j.at("corpus").get_to(r.corpus);
    j.at("cells").get_to(r.cells);
}

inline constexpr std::string_view bench_csv_header =
    "algo,m,mean_ms,verifications,occurrences,mean_shift";
inline constexpr std::string_view stats_csv_header = "corpus,m,alpha_hat,beta_hat";

/// Benchmark rows: csv is one line per (algorithm, m); markdown puts
/// algorithms in rows and pattern lengths in columns, showing mean ms.
inline std::string emit_table(const std::vector<bench_row>& rows, table_format format) {
    detail::require_rows(rows);
    std::string out;
    switch (format) {
    case table_format::csv:
        out = std::string(bench_csv_header) + "\n";
        for (const auto& r : rows) {
            for (const auto& c : r.cells) {
                out += r.algo + "," + std::to_string(c.m) + "," + detail::exact(c.mean_ms) + "," +
                       detail::exact(c.verifications) + "," + detail::exact(c.occurrences) + "," +
                       detail::exact(c.mean_shift) + "\n";
            }
        }
        break;
    case table_format::markdown:
        out = detail::markdown_header(detail::lengths_of(rows));
        for (const auto& r : rows) {
            out += "| " + r.algo + " |";
            for (const auto& c : r.cells) out += " " + detail::fixed2(c.mean_ms) + " |";
            out += "\n";
        }
        break;
    case table_format::json:
        out = nlohmann::json(rows).dump(2) + "\n";
        break;
    }
    return out;
}

/// Statistics rows: markdown shows an alpha line and a beta line per corpus.
inline std::string emit_table(const std::vector<stats_row>& rows, table_format format) {
    detail::require_rows(rows);
    std::string out;
    switch (format) {
    case table_format::csv:
        out = std::string(stats_csv_header) + "\n";
        for (const auto& r : rows) {
            for (const auto& c : r.cells) {
                out += r.corpus + "," + std::to_string(c.m) + "," + detail::exact(c.alpha_hat) +
                       "," + detail::exact(c.beta_hat) + "\n";
            }
        }
        break;
    case table_format::markdown:
        out = detail::markdown_header(detail::lengths_of(rows));
        for (const auto& r : rows) {
            out += "| " + r.corpus + "-alpha |";
            for (const auto& c : r.cells) out += " " + detail::fixed2(c.alpha_hat) + " |";
            out += "\n| " + r.corpus + "-beta |";
            for (const auto& c : r.cells) out += " " + detail::fixed2(c.beta_hat) + " |";
            out += "\n";
        }
        break;
    case table_format::json:
        out = nlohmann::json(rows).dump(2) + "\n";
        break;
    }
    return out;
}

}  // namespace wfr::bench
