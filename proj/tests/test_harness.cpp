#include <catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>

#include "wfr/harness.hpp"

using namespace wfr;
using namespace wfr::bench;

namespace {

struct temp_file {
    std::filesystem::path path;
    explicit temp_file(const std::string& name, const std::string& contents)
        : path(std::filesystem::temp_directory_path() / name) {
        std::ofstream(path, std::ios::binary) << contents;
    }
    ~temp_file() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("load_corpus", "[harness]") {
    temp_file hello("wfr_hello.txt", "hello");
    const auto c = load_corpus(hello.path);
    CHECK(c.size() == 5);
    CHECK(c.name == "wfr_hello.txt");

    CHECK_THROWS_AS(load_corpus("/nonexistent/wfr/corpus.bin"), io_error);

    temp_file empty("wfr_empty.txt", "");
    CHECK_THROWS_AS(load_corpus(empty.path), io_error);

    std::string blob(1 << 20, '\0');
    for (std::size_t i = 0; i < blob.size(); ++i) blob[i] = static_cast<char>(i * 131 % 256);
    temp_file big("wfr_big.bin", blob);
    const auto b = load_corpus(big.path);
    CHECK(b.size() == 1048576);
    CHECK(std::equal(b.data.begin(), b.data.end(), as_bytes(blob).begin()));
}

TEST_CASE("synth_corpus", "[harness]") {
    CHECK(synth_corpus(4, 100, 7).data == synth_corpus(4, 100, 7).data);
    CHECK(synth_corpus(4, 100, 7).data != synth_corpus(4, 100, 8).data);

    const auto binary = synth_corpus(2, 1000000, 1);
    std::array<std::size_t, 256> hist{};
    for (auto b : binary.data) ++hist[b];
    CHECK(hist[0] > 0);
    CHECK(hist[1] > 0);
    CHECK(hist[0] + hist[1] == binary.size());

    const auto dna = synth_corpus(4, 1 << 20, 1);
    std::array<std::size_t, 4> freq{};
    for (auto b : dna.data) {
        REQUIRE(b < 4);
        ++freq[b];
    }
    const double expected = (1 << 20) / 4.0;
    for (auto f : freq) CHECK(std::abs(static_cast<double>(f) - expected) <= 0.01 * expected);

    CHECK_THROWS_AS(synth_corpus(1, 10, 1), config_error);
    CHECK_THROWS_AS(synth_corpus(257, 10, 1), config_error);
}

TEST_CASE("sample_patterns", "[harness]") {
    const corpus tiny{"tiny", to_buffer("abcdef"), "mem"};
    const auto one = sample_patterns(tiny, 6, 1, 99);
    REQUIRE(one.size() == 1);
    CHECK(one[0].bytes == to_buffer("abcdef"));
    CHECK(one[0].offset == 0);
    CHECK_THROWS_AS(sample_patterns(tiny, 7, 1, 1), config_error);

    const auto c = synth_corpus(4, 1 << 20, 5);
    const auto a = sample_patterns(c, 8, 500, 42);
    const auto b = sample_patterns(c, 8, 500, 42);
    REQUIRE(a.size() == 500);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].offset == b[i].offset);
        CHECK(a[i].bytes == b[i].bytes);
    }
    // Every sample is found again at its source offset.
    for (const auto& s : a) {
        const auto pos = naive_search(s.bytes, c.bytes());
        REQUIRE(std::binary_search(pos.begin(), pos.end(), s.offset));
    }
}

TEST_CASE("time_run", "[harness]") {
    const auto c = synth_corpus(4, 100000, 3);
    const auto pat = sample_patterns(c, 16, 1, 3).front().bytes;
    const auto wfr_run = time_run(make_algorithm("wfr"), pat, c.bytes());
    const auto naive_run = time_run(make_algorithm("naive"), pat, c.bytes());
    CHECK(wfr_run.duration.count() > 0);
    CHECK(wfr_run.millis() > 0.0);
    CHECK(wfr_run.outcome.positions == naive_run.outcome.positions);
    CHECK(time_run(make_algorithm("wfr"), pat, c.bytes()).outcome == wfr_run.outcome);
}

TEST_CASE("algorithm registry", "[harness]") {
    for (const char* name : {"naive", "horspool", "wfr", "wfr2", "wfr3", "wfr4"}) {
        CHECK(make_algorithm(name).id == name);
    }
    CHECK_THROWS_AS(make_algorithm("bndm"), config_error);
    CHECK_THROWS_AS(make_algorithm("wfr5"), config_error);
    CHECK_THROWS_AS(make_algorithm("wfr", {.alpha = 40}), config_error);
}

TEST_CASE("run_benchmark smoke", "[harness]") {
    const auto c = synth_corpus(4, 4096, 2);
    bench_config config;
    config.pattern_lengths = {4, 8};
    config.runs_per_length = 5;
    config.algorithms = {make_algorithm("wfr"), make_algorithm("naive")};
    const auto rows = run_benchmark(config, c);
    REQUIRE(rows.size() == 2);
    for (const auto& row : rows) {
        REQUIRE(row.cells.size() == 2);
        CHECK(row.cells[0].m == 4);
        CHECK(row.cells[1].m == 8);
        for (const auto& cell : row.cells) {
            CHECK(cell.mean_ms > 0);
            CHECK(cell.occurrences >= 1);
            CHECK(cell.verifications >= cell.occurrences);
        }
    }
    CHECK(rows[0].cells[0].occurrences == rows[1].cells[0].occurrences);

    // Counters are deterministic; only timing may move.
    const auto again = run_benchmark(config, c);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t i = 0; i < rows[r].cells.size(); ++i) {
            CHECK(again[r].cells[i].verifications == rows[r].cells[i].verifications);
            CHECK(again[r].cells[i].occurrences == rows[r].cells[i].occurrences);
            CHECK(again[r].cells[i].mean_shift == rows[r].cells[i].mean_shift);
        }
    }
}

TEST_CASE("run_benchmark rejects a broken algorithm", "[harness]") {
    const auto c = synth_corpus(4, 4096, 2);
    bench_config config;
    config.pattern_lengths = {4};
    config.runs_per_length = 3;
    config.algorithms = {make_algorithm("naive"),
                         {"broken", [](byte_view, byte_view) { return search_outcome{}; }}};
    CHECK_THROWS_AS(run_benchmark(config, c), correctness_violation);
}

TEST_CASE("run_benchmark validates its config", "[harness]") {
    const auto c = synth_corpus(4, 100, 2);
    bench_config config;
    config.algorithms = {make_algorithm("wfr")};
    config.pattern_lengths = {101};
    CHECK_THROWS_AS(run_benchmark(config, c), config_error);
    config.pattern_lengths = {4};
    config.runs_per_length = 0;
    CHECK_THROWS_AS(run_benchmark(config, c), config_error);
}

TEST_CASE("mean shift on random DNA-like text", "[harness]") {
    const auto c = synth_corpus(4, 1 << 20, 1);
    bench_config config;
    config.pattern_lengths = {64};
    config.runs_per_length = 5;
    config.algorithms = {make_algorithm("wfr")};
    const auto rows = run_benchmark(config, c);
    CHECK(rows[0].cells[0].mean_shift >= 32.0);
}

TEST_CASE("verification_stats", "[harness]") {
    const auto c = synth_corpus(4, 1 << 20, 1);
    const auto row = verification_stats(c, {4, 16}, 20, 1);
    REQUIRE(row.cells.size() == 2);
    CHECK(row.corpus == c.name);
    CHECK(row.cells[0].alpha_hat >= 3000.0);
    CHECK(row.cells[0].alpha_hat <= 5200.0);
    CHECK(row.cells[1].beta_hat - row.cells[1].alpha_hat <= 5.0);
    for (const auto& cell : row.cells) CHECK(cell.beta_hat >= cell.alpha_hat);
}

TEST_CASE("stats are normalized to 1024Kb", "[harness]") {
    // Same per-byte statistics at two lengths give comparable densities.
    const auto small = synth_corpus(4, 1 << 19, 3);
    const auto large = synth_corpus(4, 1 << 21, 3);
    const auto a = verification_stats(small, {4}, 40, 9).cells[0].alpha_hat;
    const auto b = verification_stats(large, {4}, 40, 9).cells[0].alpha_hat;
    CHECK(a == Catch::Approx(4096).epsilon(0.3));
    CHECK(b == Catch::Approx(4096).epsilon(0.3));
}
