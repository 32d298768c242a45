#pragma once

#include <istream>
#include <string>

#include "hsss/error.hpp"

namespace hsss::detail {

// Consume a "<key> <value>" line and return the value part.
inline std::string expect_field(std::istream& in, const std::string& key, const char* what)
{
    std::string line;
    if (!std::getline(in, line))
        throw FormatError(std::string(what) + ": unexpected end of file");
    if (line.rfind(key + " ", 0) != 0)
        throw FormatError(std::string(what) + ": expected '" + key + "' line, got '" + line + "'");
    return line.substr(key.size() + 1);
}

inline std::uint64_t parse_u64(const std::string& s, const char* what)
{
    try {
        std::size_t pos = 0;
        std::uint64_t v = std::stoull(s, &pos);
        if (pos != s.size())
            throw FormatError("");
        return v;
    } catch (const std::exception&) {
        throw FormatError(std::string(what) + ": invalid integer '" + s + "'");
    }
}

} // namespace hsss::detail
