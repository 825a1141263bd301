#pragma once

#include <charconv>
#include <cstdio>
#include <string>

namespace radlab {

/// Shortest round-trip decimal representation of a double.
inline std::string fmt_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

/// Fixed significant-digit rendering for human-facing tables.
inline std::string fmt_sig(double v, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

} // namespace radlab
