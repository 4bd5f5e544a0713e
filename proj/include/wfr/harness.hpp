#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wfr/baselines.hpp"
#include "wfr/bytes.hpp"
#include "wfr/engine.hpp"
#include "wfr/errors.hpp"

namespace wfr::bench {

inline constexpr double bytes_per_mebibyte = 1048576.0;

struct corpus {
    std::string name;
    byte_buffer data;
    /// File path, or "synth:sigma=<s>,length=<n>,seed=<seed>".
    std::string source;

    [[nodiscard]] byte_view bytes() const noexcept { return data; }
    [[nodiscard]] std::size_t size() const noexcept { return data.size(); }
};

/// Reads a file verbatim. Empty files are rejected.
inline corpus load_corpus(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path.string());
    byte_buffer data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    if (in.bad()) throw io_error("read failed: " + path.string());
    if (data.empty()) throw io_error("corpus file is empty: " + path.string());
    return {path.filename().string(), std::move(data), path.string()};
}

/// Uniform bytes over {0, .., sigma-1}, deterministic for a fixed seed.
inline corpus synth_corpus(unsigned sigma, std::size_t length, std::uint64_t seed) {
    if (sigma < 2 || sigma > 256) {
        throw config_error("sigma must be in [2, 256], got " + std::to_string(sigma));
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> dist(0, sigma - 1);
    byte_buffer data(length);
    for (auto& b : data) b = static_cast<byte>(dist(rng));
    return {"synth-s" + std::to_string(sigma), std::move(data),
            "synth:sigma=" + std::to_string(sigma) + ",length=" + std::to_string(length) +
                ",seed=" + std::to_string(seed)};
}

struct pattern_sample {
    std::size_t offset = 0;
    byte_buffer bytes;
};

/// Draws `count` substrings of length m at uniform offsets, with replacement.
inline std::vector<pattern_sample> sample_patterns(const corpus& c, std::size_t m,
                                                   std::size_t count, std::uint64_t seed) {
    if (m == 0) throw invalid_pattern("pattern length must be positive");
    if (m > c.size()) {
        throw config_error("pattern length " + std::to_string(m) + " exceeds corpus length " +
                           std::to_string(c.size()));
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> dist(0, c.size() - m);
    std::vector<pattern_sample> out;
    out.reserve(count);
    for (std::size_t r = 0; r < count; ++r) {
        const std::size_t off = dist(rng);
        const auto first = c.data.begin() + static_cast<std::ptrdiff_t>(off);
        out.push_back({off, byte_buffer(first, first + static_cast<std::ptrdiff_t>(m))});
    }
    return out;
}

/// A named search routine. `run` performs preprocessing and search.
struct algorithm {
    std::string id;
    std::function<search_outcome(byte_view pattern, byte_view text)> run;
};

inline algorithm wfr_algorithm(unsigned k = 1, filter_params p = {}) {
    p.validate();
    std::string id = k == 1 ? "wfr" : "wfr" + std::to_string(k);
    return {std::move(id), [k, p](byte_view pattern, byte_view text) {
                return wfr::search(pattern, text, p, chained_config{k});
            }};
}

inline algorithm naive_algorithm() {
    return {"naive", [](byte_view pattern, byte_view text) {
                return naive_search_outcome(pattern, text);
            }};
}

inline algorithm horspool_algorithm() {
    return {"horspool", [](byte_view pattern, byte_view text) {
                return horspool_search(pattern, text);
            }};
}

/// Registered names: naive, horspool, wfr, wfr2, wfr3, wfr4.
inline algorithm make_algorithm(std::string_view name, const filter_params& p = {}) {
    if (name == "naive") return naive_algorithm();
    if (name == "horspool") return horspool_algorithm();
    if (name == "wfr") return wfr_algorithm(1, p);
    if (name.size() == 4 && name.starts_with("wfr") && name[3] >= '1' && name[3] <= '4') {
        return wfr_algorithm(static_cast<unsigned>(name[3] - '0'), p);
    }
    throw config_error("unknown algorithm: " + std::string(name));
}

struct timed_outcome {
    std::chrono::nanoseconds duration{};
    search_outcome outcome;

    [[nodiscard]] double millis() const noexcept {
        return std::chrono::duration<double, std::milli>(duration).count();
    }
};

/// Wall-clock time of preprocessing plus search.
inline timed_outcome time_run(const algorithm& algo, byte_view pattern, byte_view text) {
    const auto start = std::chrono::steady_clock::now();
    search_outcome outcome = algo.run(pattern, text);
    const auto stop = std::chrono::steady_clock::now();
    return {std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start),
            std::move(outcome)};
}

struct bench_config {
    std::vector<std::size_t> pattern_lengths{4, 8, 16, 32, 64, 128, 256, 512, 1024};
    std::size_t runs_per_length = 50;
    std::uint64_t seed = 1;
    std::vector<algorithm> algorithms;

    void validate(const corpus& c) const {
        if (runs_per_length < 1) throw config_error("runs per length must be at least 1");
        if (algorithms.empty()) throw config_error("no algorithms selected");
        if (pattern_lengths.empty()) throw config_error("no pattern lengths selected");
        for (std::size_t m : pattern_lengths) {
            if (m == 0 || m > c.size()) {
                throw config_error("pattern length " + std::to_string(m) +
                                   " outside [1, corpus length " + std::to_string(c.size()) +
                                   "]");
            }
        }
    }
};

/// Means over the sampled patterns of one length.
struct bench_cell {
    std::size_t m = 0;
    double mean_ms = 0;
    double verifications = 0;
    double occurrences = 0;
    double mean_shift = 0;

    friend bool operator==(const bench_cell&, const bench_cell&) = default;
};

struct bench_row {
    std::string algo;
    std::vector<bench_cell> cells;

    friend bool operator==(const bench_row&, const bench_row&) = default;
};

/// Seed used for the patterns of one length; shared by all algorithms.
[[nodiscard]] inline std::uint64_t length_seed(std::uint64_t seed, std::size_t m) noexcept {
    return seed ^ (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(m) + 1));
}

/// Runs every algorithm over the same sampled patterns. Any disagreement in
/// occurrence positions aborts with correctness_violation.
inline std::vector<bench_row> run_benchmark(const bench_config& config, const corpus& c) {
    config.validate(c);
    std::vector<bench_row> rows;
    for (const auto& a : config.algorithms) rows.push_back({a.id, {}});

    for (std::size_t m : config.pattern_lengths) {
        const auto patterns =
            sample_patterns(c, m, config.runs_per_length, length_seed(config.seed, m));
        std::vector<bench_cell> sums(config.algorithms.size(), bench_cell{m});
        for (const auto& pat : patterns) {
            std::vector<std::size_t> reference;
            for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
                const auto& algo = config.algorithms[a];
                auto timed = time_run(algo, pat.bytes, c.bytes());
                const auto& o = timed.outcome;
                if (a == 0) {
                    reference = o.positions;
                } else if (o.positions != reference) {
                    throw correctness_violation(
                        "algorithm " + algo.id + " reported " +
                        std::to_string(o.occurrence_count()) + " occurrences, " +
                        config.algorithms[0].id + " reported " +
                        std::to_string(reference.size()) + " (m=" + std::to_string(m) +
                        ", pattern offset " + std::to_string(pat.offset) + ")");
                }
                auto& s = sums[a];
                s.mean_ms += timed.millis();
                s.verifications += static_cast<double>(o.verification_count);
                s.occurrences += static_cast<double>(o.occurrence_count());
                s.mean_shift += o.mean_shift();
            }
        }
        const auto runs = static_cast<double>(patterns.size());
        for (std::size_t a = 0; a < sums.size(); ++a) {
            auto cell = sums[a];
            cell.mean_ms /= runs;
            cell.verifications /= runs;
            cell.occurrences /= runs;
            cell.mean_shift /= runs;
            rows[a].cells.push_back(cell);
        }
    }
    return rows;
}

struct stats_cell {
    std::size_t m = 0;
    /// Mean occurrences per 1,048,576 text bytes.
    double alpha_hat = 0;
    /// Mean verifications per 1,048,576 text bytes.
    double beta_hat = 0;

    friend bool operator==(const stats_cell&, const stats_cell&) = default;
};

struct stats_row {
    std::string corpus;
    std::vector<stats_cell> cells;

    friend bool operator==(const stats_row&, const stats_row&) = default;
};

/// Occurrence and verification densities of WFR, normalized to a 1024Kb text.
inline stats_row verification_stats(const corpus& c, const std::vector<std::size_t>& m_values,
                                     std::size_t runs, std::uint64_t seed,
                                     const filter_params& p = {}, chained_config chained = {}) {
    if (runs < 1) throw config_error("runs must be at least 1");
    p.validate();
    stats_row row{c.name, {}};
    const double scale = bytes_per_mebibyte / static_cast<double>(c.size());
    for (std::size_t m : m_values) {
        if (m == 0 || m > c.size()) {
            throw config_error("pattern length " + std::to_string(m) + " outside corpus");
        }
        const auto patterns = sample_patterns(c, m, runs, length_seed(seed, m));
        double occ = 0;
        double ver = 0;
        for (const auto& pat : patterns) {
            const auto o = wfr::search(pat.bytes, c.bytes(), p, chained);
            occ += static_cast<double>(o.occurrence_count());
            ver += static_cast<double>(o.verification_count);
        }
        const auto r = static_cast<double>(patterns.size());
        row.cells.push_back({m, occ / r * scale, ver / r * scale});
    }
    return row;
}

}  // namespace wfr::bench
