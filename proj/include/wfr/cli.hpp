#pragma once

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wfr/baselines.hpp"
#include "wfr/engine.hpp"
#include "wfr/errors.hpp"
#include "wfr/harness.hpp"
#include "wfr/report.hpp"

namespace wfr::cli {

enum exit_code : int {
    ok = 0,
    no_match = 1,
    usage_error = 2,
    io_failure = 3,
    correctness_failure = 4,
};

inline constexpr const char* alpha_env = "WFR_DEFAULT_ALPHA";

namespace detail {

inline byte_buffer read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path);
    byte_buffer data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    if (in.bad()) throw io_error("read failed: " + path);
    return data;
}

inline unsigned parse_unsigned(std::string_view s, std::string_view what) {
    unsigned v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || end != s.data() + s.size()) {
        throw config_error(std::string(what) + ": not a non-negative integer: '" + std::string(s) +
                           "'");
    }
    return v;
}

inline unsigned default_alpha() {
    if (const char* env = std::getenv(alpha_env); env != nullptr && *env != '\0') {
        return parse_unsigned(env, alpha_env);
    }
    return filter_params{}.alpha;
}

/// Flags shared by bench and stats.
struct corpus_flags {
    std::string text;
    std::string synth;
    std::vector<std::size_t> m{4, 8, 16, 32, 64, 128, 256, 512, 1024};
    std::size_t runs = 50;
    std::uint64_t seed = 1;
    std::string format = "markdown";
    std::optional<unsigned> alpha;
    unsigned shift = 2;

    void attach(CLI::App& sub) {
        auto* text_opt = sub.add_option("--text", text, "Corpus file (raw bytes)");
        auto* synth_opt =
            sub.add_option("--synth", synth, "Synthetic corpus as SIGMA,LENGTH (uniform bytes)");
        text_opt->excludes(synth_opt);
        sub.add_option("--m", m, "Pattern lengths")->delimiter(',');
        sub.add_option("--runs", runs, "Patterns sampled per length")->check(CLI::PositiveNumber);
        sub.add_option("--seed", seed, "Seed for corpus synthesis and pattern sampling");
        sub.add_option("--format", format, "csv | markdown | json");
        sub.add_option("--alpha", alpha, "Hash width in bits (default 16 or $WFR_DEFAULT_ALPHA)");
        sub.add_option("--shift", shift, "Bits shifted per character (1 or 2)");
    }

    [[nodiscard]] filter_params params() const {
        filter_params p;
        p.alpha = alpha ? *alpha : default_alpha();
        p.shift = shift;
        p.validate();
        return p;
    }

    [[nodiscard]] bench::corpus load() const {
        if (!text.empty()) return bench::load_corpus(text);
        if (synth.empty()) throw config_error("one of --text or --synth is required");
        const auto comma = synth.find(',');
        if (comma == std::string::npos) throw config_error("--synth expects SIGMA,LENGTH");
        const unsigned sigma = parse_unsigned(std::string_view(synth).substr(0, comma), "--synth");
        const unsigned length =
            parse_unsigned(std::string_view(synth).substr(comma + 1), "--synth");
        if (length == 0) throw config_error("--synth length must be positive");
        return bench::synth_corpus(sigma, length, seed);
    }
};

inline std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const auto comma = s.find(',', start);
        const auto end = comma == std::string::npos ? s.size() : comma;
        if (end > start) out.push_back(s.substr(start, end - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace detail

/// Runs the command line. Results go to `out`, diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weak factor recognition string matching"};
    app.require_subcommand(1, 1);

    // search
    auto* search_cmd = app.add_subcommand("search", "Report every occurrence of a pattern");
    std::string pattern;
    std::string pattern_file;
    std::string text_path;
    std::string algo = "wfr";
    unsigned k = 1;
    std::optional<unsigned> alpha;
    unsigned shift = 2;
    auto* pat_opt = search_cmd->add_option("--pattern", pattern, "Pattern bytes, taken verbatim");
    auto* pat_file_opt =
        search_cmd->add_option("--pattern-file", pattern_file, "Read the pattern from a file");
    pat_opt->excludes(pat_file_opt);
    search_cmd->add_option("text", text_path, "File to search")->required();
    search_cmd->add_option("--algo", algo, "wfr | naive | horspool");
    search_cmd->add_option("--k", k, "Characters per filter test, 1..4 (wfr)");
    search_cmd->add_option("--alpha", alpha, "Hash width in bits (wfr)");
    search_cmd->add_option("--shift", shift, "Bits shifted per character, 1 or 2 (wfr)");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Time algorithms over sampled patterns");
    detail::corpus_flags bench_flags;
    bench_flags.attach(*bench_cmd);
    std::string algos = "wfr,wfr2,wfr3,wfr4,horspool";
    bench_cmd->add_option("--algos", algos, "Comma-separated: naive,horspool,wfr,wfr2,wfr3,wfr4");

    // stats
    auto* stats_cmd = app.add_subcommand("stats", "Occurrence and verification densities");
    detail::corpus_flags stats_flags;
    stats_flags.attach(*stats_cmd);
    unsigned stats_k = 1;
    stats_cmd->add_option("--k", stats_k, "Characters per filter test, 1..4");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return ok;
        }
        err << "error: " << e.what() << "\n";
        return usage_error;
    }

    try {
        if (*search_cmd) {
            if (pattern_file.empty() && !search_cmd->count("--pattern")) {
                throw config_error("one of --pattern or --pattern-file is required");
            }
            const byte_buffer pat =
                pattern_file.empty() ? to_buffer(pattern) : detail::read_file(pattern_file);
            require_pattern(pat);
            filter_params p;
            p.alpha = alpha ? *alpha : detail::default_alpha();
            p.shift = shift;
            std::optional<bench::algorithm> runner;
            if (algo == "wfr") {
                if (k < 1 || k > chained_config::max_k || k > pat.size()) {
                    throw config_error("--k " + std::to_string(k) + " invalid for pattern length " +
                                       std::to_string(pat.size()));
                }
                runner = bench::wfr_algorithm(k, p);
            } else if (algo == "naive" || algo == "horspool") {
                runner = bench::make_algorithm(algo);
            } else {
                throw config_error("unknown algorithm: " + algo);
            }
            const byte_buffer text = detail::read_file(text_path);
            const auto outcome = runner->run(pat, text);
            for (auto pos : outcome.positions) out << pos << "\n";
            out << "occurrences=" << outcome.occurrence_count()
                << " verifications=" << outcome.verification_count << "\n";
            return outcome.occurrence_count() > 0 ? ok : no_match;
        }

        if (*bench_cmd) {
            const auto format = bench::parse_format(bench_flags.format);
            const auto p = bench_flags.params();
            bench::bench_config config;
            config.pattern_lengths = bench_flags.m;
            config.runs_per_length = bench_flags.runs;
            config.seed = bench_flags.seed;
            for (const auto& name : detail::split(algos)) {
                config.algorithms.push_back(bench::make_algorithm(name, p));
            }
            const auto corpus = bench_flags.load();
            out << bench::emit_table(bench::run_benchmark(config, corpus), format);
            return ok;
        }

        if (*stats_cmd) {
            const auto format = bench::parse_format(stats_flags.format);
            const auto p = stats_flags.params();
            if (stats_k < 1 || stats_k > chained_config::max_k) {
                throw config_error("--k must be in [1, 4]");
            }
            for (auto m : stats_flags.m) {
                if (stats_k > m) throw config_error("--k exceeds pattern length " + std::to_string(m));
            }
            const auto corpus = stats_flags.load();
            const auto row = bench::verification_stats(corpus, stats_flags.m, stats_flags.runs,
                                                        stats_flags.seed, p, {stats_k});
            out << bench::emit_table(std::vector<bench::stats_row>{row}, format);
            return ok;
        }
    } catch (const io_error& e) {
        err << "error: " << e.what() << "\n";
        return io_failure;
    } catch (const correctness_violation& e) {
        err << "correctness violation: " << e.what() << "\n";
        return correctness_failure;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
    return usage_error;
}

}  // namespace wfr::cli
