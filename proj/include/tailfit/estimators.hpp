#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "tailfit/ranklist.hpp"

namespace tailfit {

/// Result of the log-log rank regression. The slope of ln(value) on
/// ln(rank) is -alpha_rank; its inverse is the tail exponent.
struct RankFit {
    double alpha_rank;
    double alpha;         // 1 / alpha_rank
    double stderr_alpha;  // slope error propagated through the reciprocal
    double intercept;
    double r_squared;
    std::size_t n_points;
};

/// Conditional maximum-likelihood estimate of the tail exponent.
struct HillFit {
    double alpha_hat;
    double std_error;  // alpha_hat / sqrt(n)
    std::size_t n;
    double m_min;  // conditioning threshold actually used
};

enum class FitMethod { rank_regression, hill };

struct BootstrapCi {
    double lower;
    double upper;
    double level;
    std::size_t replicates;  // requested replicates
    double point;            // full-sample estimate
    std::size_t failures;    // replicates skipped as degenerate
};

/// Unweighted OLS of ln(value) on ln(rank) over the whole list. Needs at
/// least two distinct values and a strictly negative slope.
RankFit fit_rank_regression(const RankList& list);

/// alpha_hat = n / sum ln(m_i / m_min). By default m_min is the smallest
/// value in the list and all n values enter the sum (the smallest
/// contributes ln 1 = 0).
HillFit fit_hill(const RankList& list, std::optional<double> m_min = std::nullopt);

/// Percentile bootstrap over value resamples. Per-replicate sub-seeds are
/// derived from `seed`, and replicate estimates are sorted before the
/// quantiles are taken, so the result does not depend on evaluation order.
/// Degenerate replicates are skipped and counted; more than half failing
/// raises bootstrap_failure_error.
BootstrapCi bootstrap_ci(const RankList& list, FitMethod method, std::size_t replicates,
                         double level, std::uint64_t seed);

}  // namespace tailfit
