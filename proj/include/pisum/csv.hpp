#pragma once

// CSV emission with shortest round-trip decimal formatting: the printed
// double parses back to the identical bits, and no digits are wasted.
// Comma separated, header row first, LF line endings.

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace pisum {

inline std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline std::string format_u64(std::uint64_t v) {
    char buf[24];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view s) {
    const std::string buf(s);
    char* end = nullptr;
    const double v = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size())
        throw std::invalid_argument("parse_double: trailing characters in '" + buf + "'");
    return v;
}

class CsvWriter {
public:
    explicit CsvWriter(std::ostream& os) : os_(os) {}

    void row(const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) os_ << ',';
            os_ << fields[i];
        }
        os_ << '\n';
    }

    // comment lines carry run summaries without breaking CSV consumers
    void comment(const std::string& text) { os_ << "# " << text << '\n'; }

private:
    std::ostream& os_;
};

}  // namespace pisum
