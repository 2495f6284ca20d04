#include "tailfit/numeric.hpp"

#include <charconv>
#include <system_error>

namespace tailfit {

std::string format_double(double x, const NumberFormat& fmt) {
    char buf[64];
    const std::to_chars_result res =
        fmt.full ? std::to_chars(buf, buf + sizeof buf, x)
                 : std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general,
                                 fmt.significant_digits);
    return std::string(buf, res.ptr);
}

std::string format_int(long long n) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, n);
    return std::string(buf, res.ptr);
}

std::string format_size(std::size_t n) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, n);
    return std::string(buf, res.ptr);
}

std::optional<double> try_parse_double(std::string_view text) {
    if (text.empty()) return std::nullopt;
    double value = 0.0;
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), last, value);
    if (ec != std::errc() || ptr != last) return std::nullopt;
    return value;
}

std::optional<long long> try_parse_int(std::string_view text) {
    if (text.empty()) return std::nullopt;
    long long value = 0;
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), last, value);
    if (ec != std::errc() || ptr != last) return std::nullopt;
    return value;
}

}  // namespace tailfit
