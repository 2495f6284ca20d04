#pragma once

#include <cstddef>
#include <cstdint>

#include "tailfit/pareto.hpp"
#include "tailfit/ranklist.hpp"

namespace tailfit {

/// n i.i.d. draws, sorted descending; identical output for equal seeds.
RankList generate_ranklist(const ParetoParams& params, std::size_t n, std::uint64_t seed,
                           GroupKey key);

/// Noise-free sequence m_r = m0 * (n/r)^(1/alpha), r = 1..n, so that the
/// survival function at m_r is exactly r/n and the log-log rank plot is
/// exactly collinear with slope -1/alpha.
RankList generate_exact_ranksize(const ParetoParams& params, std::size_t n, GroupKey key);

}  // namespace tailfit
