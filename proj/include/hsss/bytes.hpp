#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hsss {

using Bytes = std::vector<std::uint8_t>;

inline Bytes to_bytes(std::string_view s)
{
    return Bytes(s.begin(), s.end());
}

inline std::string to_string(std::span<const std::uint8_t> b)
{
    return std::string(b.begin(), b.end());
}

// Lowercase hex, no prefix.
std::string hex_encode(std::span<const std::uint8_t> data);

// Accepts lowercase or uppercase hex; throws FormatError on odd length
// or non-hex characters.
Bytes hex_decode(std::string_view hex);

} // namespace hsss
