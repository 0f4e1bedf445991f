#pragma once

#include <charconv>
#include <string>

namespace minicar {

/// Shortest decimal form that round-trips the exact double value.
inline std::string fmt_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace minicar
