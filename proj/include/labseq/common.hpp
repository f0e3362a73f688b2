#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace labseq {

inline constexpr const char* version = "0.1.0";

/// Base class for all errors raised by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised by sequence parsing; `position` is 1-based (character position for
/// compact "+-" input, token index for whitespace/comma separated input;
/// 0 for empty input).
struct parse_error : error {
    parse_error(const std::string& what, std::size_t pos) : error(what), position(pos) {}
    std::size_t position;
};

using uint128 = unsigned __int128;

inline std::string to_string(uint128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    return {s.rbegin(), s.rend()};
}

/// Fixed-point rendering used for all rational/real report values.
inline std::string format_fixed(double v, int digits = 4) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    std::string s(buf);
    if (s == "-0" || s.rfind("-0.", 0) == 0) {
        bool all_zero = true;
        for (char c : s)
            if (c != '-' && c != '0' && c != '.') { all_zero = false; break; }
        if (all_zero) s.erase(0, 1);
    }
    return s;
}

/// Round to 4 decimals before serialization so reports are byte-stable.
inline double round4(double v) {
    double r = std::llround(v * 1e4) / 1e4;
    return r == 0.0 ? 0.0 : r;
}

}  // namespace labseq
