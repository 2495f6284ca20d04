#pragma once

#include <array>

#include "tailfit/aggregate.hpp"

namespace tailfit {

/// Published tail exponents of the Norwegian top-100 income and wealth
/// rankings, 2010-2013: one row per (region, year, kind) for the 19
/// regions plus the whole-country "NORWAY" rows. The same data ships as
/// data/norway_top100_exponents_2010_2013.csv.
const ExponentTable& norway_reference_exponents();

inline constexpr std::array<int, 4> norway_reference_years{2010, 2011, 2012, 2013};
inline constexpr std::size_t norway_reference_region_count = 19;

}  // namespace tailfit
