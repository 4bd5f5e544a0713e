#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "wfr/bytes.hpp"
#include "wfr/engine.hpp"

namespace wfr {

/// Compares the pattern at every alignment. This is the correctness oracle.
[[nodiscard]] inline std::vector<std::size_t> naive_search(byte_view pattern, byte_view text) {
    require_pattern(pattern);
    std::vector<std::size_t> out;
    const std::size_t m = pattern.size();
    if (m > text.size()) return out;
    for (std::size_t p = 0; p + m <= text.size(); ++p) {
        std::size_t k = 0;
        while (k < m && pattern[k] == text[p + k]) ++k;
        if (k == m) out.push_back(p);
    }
    return out;
}

/// Same as naive_search, with counters filled in: every alignment is one
/// attempt and one verification, and every shift is a single byte.
[[nodiscard]] inline search_outcome naive_search_outcome(byte_view pattern, byte_view text) {
    search_outcome out;
    out.positions = naive_search(pattern, text);
    if (pattern.size() <= text.size()) {
        out.attempt_count = text.size() - pattern.size() + 1;
        out.verification_count = out.attempt_count;
        out.total_shift = out.attempt_count;
    }
    return out;
}

/// Boyer-Moore-Horspool with a 256-entry bad-character table.
/// A verification is counted whenever the window's last byte matches.
[[nodiscard]] inline search_outcome horspool_search(byte_view pattern, byte_view text) {
    require_pattern(pattern);
    search_outcome out;
    const std::size_t m = pattern.size();
    const std::size_t n = text.size();
    if (m > n) return out;

    std::array<std::size_t, 256> shift;
    shift.fill(m);
    for (std::size_t i = 0; i + 1 < m; ++i) shift[pattern[i]] = m - 1 - i;

    const byte last = pattern[m - 1];
    std::size_t pos = 0;
    while (pos + m <= n) {
        ++out.attempt_count;
        const byte c = text[pos + m - 1];
        if (c == last) {
            ++out.verification_count;
            std::size_t k = 0;
            while (k + 1 < m && pattern[k] == text[pos + k]) ++k;
            const bool hit = k + 1 == m;
            out.check_comparisons += hit ? m : k + 2;
            if (hit) out.positions.push_back(pos);
        }
        out.total_shift += shift[c];
        pos += shift[c];
    }
    return out;
}

}  // namespace wfr
