#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace wfr {

using byte = std::uint8_t;
using byte_view = std::span<const byte>;
using byte_buffer = std::vector<byte>;

inline byte_view as_bytes(std::string_view s) noexcept {
    return {reinterpret_cast<const byte*>(s.data()), s.size()};
}

inline byte_buffer to_buffer(std::string_view s) {
    auto v = as_bytes(s);
    return {v.begin(), v.end()};
}

}  // namespace wfr
