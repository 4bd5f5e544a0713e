#pragma once

#include <bit>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "wfr/errors.hpp"

namespace wfr {

using hash_value = std::uint32_t;

/// Tunable constants shared by preprocessing and every search variant.
struct filter_params {
    /// Hash values live in [0, 2^alpha); the filter holds 2^alpha bits.
    unsigned alpha = 16;
    /// Bits the running hash is shifted by before adding the next byte.
    unsigned shift = 2;
    /// Storage word width of the filter. Must match the filter's word type.
    unsigned word_bits = 64;

    static constexpr unsigned min_alpha = 8;
    static constexpr unsigned max_alpha = 30;

    [[nodiscard]] hash_value mask() const noexcept {
        return static_cast<hash_value>((std::uint64_t{1} << alpha) - 1);
    }
    [[nodiscard]] std::size_t capacity() const noexcept { return std::size_t{1} << alpha; }

    void validate() const {
        if (alpha < min_alpha || alpha > max_alpha) {
            throw config_error("alpha must be in [8, 30], got " + std::to_string(alpha));
        }
        if (shift != 1 && shift != 2) {
            throw config_error("shift must be 1 or 2, got " + std::to_string(shift));
        }
        if (word_bits == 0 || !std::has_single_bit(word_bits) || word_bits > capacity()) {
            throw config_error("word_bits must be a power of two dividing 2^alpha, got " +
                               std::to_string(word_bits));
        }
    }

    friend bool operator==(const filter_params&, const filter_params&) = default;
};

/// Fixed-capacity bit vector of 2^alpha bits, packed into words of type Word.
/// Bits can only be set; there is no clear or resize.
template <std::unsigned_integral Word>
class basic_factor_filter {
public:
    using word_type = Word;
    static constexpr unsigned bits_per_word = std::numeric_limits<Word>::digits;

    explicit basic_factor_filter(filter_params params) : params_(params) {
        params_.validate();
        if (params_.word_bits != bits_per_word) {
            throw config_error("word_bits " + std::to_string(params_.word_bits) +
                               " does not match filter word type of " +
                               std::to_string(bits_per_word) + " bits");
        }
        words_.assign(params_.capacity() / bits_per_word, Word{0});
    }

    void set_bit(hash_value v) noexcept {
        words_[v / bits_per_word] |= Word{1} << (v % bits_per_word);
    }

    [[nodiscard]] bool test_bit(hash_value v) const noexcept {
        return (words_[v / bits_per_word] & (Word{1} << (v % bits_per_word))) != 0;
    }

    [[nodiscard]] std::size_t popcount() const noexcept {
        std::size_t total = 0;
        for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    [[nodiscard]] std::size_t size() const noexcept { return params_.capacity(); }
    [[nodiscard]] std::size_t word_count() const noexcept { return words_.size(); }
    [[nodiscard]] const filter_params& params() const noexcept { return params_; }

private:
    filter_params params_;
    std::vector<Word> words_;
};

using factor_filter = basic_factor_filter<std::uint64_t>;

/// Params with word_bits matched to Word.
template <std::unsigned_integral Word>
[[nodiscard]] filter_params with_word(filter_params p) noexcept {
    p.word_bits = std::numeric_limits<Word>::digits;
    return p;
}

}  // namespace wfr
