#pragma once

// Grid spec mini-language: "<start>:<stop>:x<factor>", e.g. "1e4:1e8:x10"
// expands to {1e4, 1e5, 1e6, 1e7, 1e8}. Start and stop are parsed as reals
// and rounded to integers; points are generated multiplicatively and the
// stop point is included when the progression lands on it (small relative
// slack absorbs decimal rounding).

#include <cctype>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pisum {

namespace detail {

inline double parse_real(std::string_view s, const char* what) {
    if (s.empty()) throw std::invalid_argument(std::string("grid: empty ") + what);
    std::string buf(s);
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(buf, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("grid: bad ") + what + " '" + buf + "'");
    }
    if (used != buf.size())
        throw std::invalid_argument(std::string("grid: bad ") + what + " '" + buf + "'");
    return v;
}

}  // namespace detail

inline std::vector<std::uint64_t> parse_grid(std::string_view spec) {
    const auto c1 = spec.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : spec.find(':', c1 + 1);
    if (c2 == std::string_view::npos)
        throw std::invalid_argument("grid: expected '<start>:<stop>:x<factor>'");
    const auto start_s = spec.substr(0, c1);
    const auto stop_s = spec.substr(c1 + 1, c2 - c1 - 1);
    auto factor_s = spec.substr(c2 + 1);
    if (factor_s.empty() || (factor_s[0] != 'x' && factor_s[0] != 'X'))
        throw std::invalid_argument("grid: factor must be written as x<factor>");
    factor_s.remove_prefix(1);

    const double start = detail::parse_real(start_s, "start");
    const double stop = detail::parse_real(stop_s, "stop");
    const double factor = detail::parse_real(factor_s, "factor");
    if (!(start >= 1)) throw std::invalid_argument("grid: start must be >= 1");
    if (!(stop >= start)) throw std::invalid_argument("grid: stop must be >= start");
    if (!(factor > 1)) throw std::invalid_argument("grid: factor must be > 1");

    std::vector<std::uint64_t> out;
    for (double v = start; v <= stop * (1 + 1e-12); v *= factor) {
        const auto p = static_cast<std::uint64_t>(std::llround(v));
        if (out.empty() || p != out.back()) out.push_back(p);
        if (out.size() > 10000) throw std::invalid_argument("grid: too many points");
    }
    return out;
}

}  // namespace pisum
