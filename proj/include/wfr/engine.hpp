#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "wfr/bytes.hpp"
#include "wfr/errors.hpp"
#include "wfr/factor_filter.hpp"

namespace wfr {

/// How many characters are folded into the hash between two filter tests.
/// k = 1 is the base algorithm.
struct chained_config {
    unsigned k = 1;

    static constexpr unsigned max_k = 4;
};

/// Occurrences plus exact instrumentation of one search call.
struct search_outcome {
    std::vector<std::size_t> positions;
    std::size_t verification_count = 0;
    std::size_t attempt_count = 0;
    std::size_t total_shift = 0;
    /// Byte comparisons performed inside verification.
    std::size_t check_comparisons = 0;

    [[nodiscard]] std::size_t occurrence_count() const noexcept { return positions.size(); }
    [[nodiscard]] std::size_t false_positive_count() const noexcept {
        return verification_count - positions.size();
    }
    [[nodiscard]] double mean_shift() const noexcept {
        return attempt_count == 0 ? 0.0
                                  : static_cast<double>(total_shift) /
                                        static_cast<double>(attempt_count);
    }

    friend bool operator==(const search_outcome&, const search_outcome&) = default;
};

[[nodiscard]] inline hash_value extend_hash(hash_value v, byte c, const filter_params& p) noexcept {
    return static_cast<hash_value>(((std::uint64_t{v} << p.shift) + c) & p.mask());
}

/// h(empty) = 0, h(z) = ((h(z[1..]) << shift) + z[0]) mod 2^alpha.
[[nodiscard]] inline hash_value hash_factor(byte_view z, const filter_params& p) noexcept {
    hash_value v = 0;
    for (auto it = z.rbegin(); it != z.rend(); ++it) v = extend_hash(v, *it, p);
    return v;
}

inline void require_pattern(byte_view pattern) {
    if (pattern.empty()) throw invalid_pattern("pattern must not be empty");
}

/// Sets the bit of every nonempty factor of the pattern. O(m^2).
template <std::unsigned_integral Word = std::uint64_t>
[[nodiscard]] basic_factor_filter<Word> preprocess(byte_view pattern, const filter_params& p) {
    require_pattern(pattern);
    basic_factor_filter<Word> filter(p);
    // Factors ending at i, grown leftwards one byte at a time.
    for (std::size_t i = pattern.size(); i-- > 0;) {
        hash_value v = 0;
        for (std::size_t j = i + 1; j-- > 0;) {
            v = extend_hash(v, pattern[j], p);
            filter.set_bit(v);
        }
    }
    return filter;
}

namespace detail {

inline std::size_t compare_window(byte_view pattern, byte_view text, std::size_t i) noexcept {
    std::size_t k = 0;
    const std::size_t m = pattern.size();
    while (k < m && pattern[k] == text[i + k]) ++k;
    return k;
}

}  // namespace detail

/// True iff text[i .. i+m-1] equals the pattern. Requires i + m <= n.
[[nodiscard]] inline bool check(byte_view pattern, byte_view text, std::size_t i) noexcept {
    return detail::compare_window(pattern, text, i) == pattern.size();
}

/// Backward window scan over a filter built from the same pattern.
template <std::unsigned_integral Word>
[[nodiscard]] search_outcome search(byte_view pattern, const basic_factor_filter<Word>& filter,
                                    byte_view text, chained_config chained = {}) {
    require_pattern(pattern);
    const std::size_t m = pattern.size();
    const std::size_t n = text.size();
    const std::size_t k = chained.k;
    if (k < 1 || k > chained_config::max_k) {
        throw config_error("chain length k must be in [1, 4], got " + std::to_string(k));
    }
    if (k > m) {
        throw config_error("chain length k=" + std::to_string(k) +
                           " exceeds pattern length " + std::to_string(m));
    }

    search_outcome out;
    if (m > n) return out;

    const filter_params& p = filter.params();
    std::size_t j = m - 1;
    while (j < n) {
        const std::size_t i = j + 1 - m;
        ++out.attempt_count;
        hash_value v = text[j];
        for (std::size_t fold = 1; fold < k; ++fold) {
            --j;
            v = extend_hash(v, text[j], p);
        }
        while (j > i && filter.test_bit(v)) {
            const std::size_t group = std::min(k, j - i);
            for (std::size_t g = 0; g < group; ++g) {
                --j;
                v = extend_hash(v, text[j], p);
            }
        }
        if (j == i && filter.test_bit(v)) {
            ++out.verification_count;
            const std::size_t matched = detail::compare_window(pattern, text, i);
            out.check_comparisons += matched == m ? m : matched + 1;
            if (matched == m) out.positions.push_back(i);
        }
        // The next window starts right after the last byte that was read.
        out.total_shift += j + 1 - i;
        j += m;
    }
    return out;
}

/// Preprocesses the pattern, then searches.
[[nodiscard]] inline search_outcome search(byte_view pattern, byte_view text,
                                           const filter_params& p = {},
                                           chained_config chained = {}) {
    p.validate();
    require_pattern(pattern);
    if (chained.k < 1 || chained.k > chained_config::max_k || chained.k > pattern.size()) {
        throw config_error("chain length k=" + std::to_string(chained.k) +
                           " invalid for pattern length " + std::to_string(pattern.size()));
    }
    return wfr::search(pattern, preprocess(pattern, with_word<std::uint64_t>(p)), text, chained);
}

}  // namespace wfr
