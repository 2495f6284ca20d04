#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace tailfit {

/// Text form of numbers written by the CSV/CLI layer. The decimal separator
/// is always '.' regardless of the process locale.
struct NumberFormat {
    int significant_digits = 6;
    bool full = false;  // shortest round-trip form, overrides significant_digits
};

std::string format_double(double x, const NumberFormat& fmt = {});
std::string format_int(long long n);
std::string format_size(std::size_t n);

// Strict parsers: the whole string must be consumed, locale ignored.
std::optional<double> try_parse_double(std::string_view text);
std::optional<long long> try_parse_int(std::string_view text);

}  // namespace tailfit
