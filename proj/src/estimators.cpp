#include "tailfit/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "tailfit/detail/rng.hpp"
#include "tailfit/errors.hpp"

namespace tailfit {

namespace {

double fit_alpha(const RankList& list, FitMethod method) {
    return method == FitMethod::rank_regression ? fit_rank_regression(list).alpha
                                                : fit_hill(list).alpha_hat;
}

// Linear interpolation between order statistics of a sorted vector.
double sorted_quantile(const std::vector<double>& sorted, double p) {
    const std::size_t n = sorted.size();
    if (n == 1) return sorted[0];
    const double h = p * static_cast<double>(n - 1);
    const auto lo = static_cast<std::size_t>(h);
    if (lo + 1 >= n) return sorted[n - 1];
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

RankFit fit_rank_regression(const RankList& list) {
    const std::size_t n = list.values.size();
    if (n < 2 || list.values.front() == list.values.back())
        throw degenerate_input_error("rank regression needs at least two distinct values");

    std::vector<double> x(n), y(n);
    for (std::size_t r = 0; r < n; ++r) {
        x[r] = std::log(static_cast<double>(r + 1));
        y[r] = std::log(list.values[r]);
    }
    double x_mean = 0.0, y_mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        x_mean += x[i];
        y_mean += y[i];
    }
    x_mean /= static_cast<double>(n);
    y_mean /= static_cast<double>(n);

    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - x_mean;
        const double dy = y[i] - y_mean;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    const double slope = sxy / sxx;
    if (!(slope < 0.0)) throw degenerate_fit_error("log-log slope is not negative");

    double ssr = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double resid = (y[i] - y_mean) - slope * (x[i] - x_mean);
        ssr += resid * resid;
    }

    const double alpha_rank = -slope;
    const double slope_se =
        n > 2 ? std::sqrt(ssr / static_cast<double>(n - 2) / sxx) : 0.0;
    return RankFit{alpha_rank,
                   1.0 / alpha_rank,
                   slope_se / (alpha_rank * alpha_rank),
                   y_mean - slope * x_mean,
                   1.0 - ssr / syy,
                   n};
}

HillFit fit_hill(const RankList& list, std::optional<double> m_min_opt) {
    if (list.values.empty()) throw empty_input_error("hill estimate needs at least one value");
    const std::size_t n = list.values.size();
    const double sample_min = list.values.back();
    const double m_min = m_min_opt.value_or(sample_min);
    if (!(std::isfinite(m_min) && m_min > 0.0))
        throw parameter_error("m_min must be a positive finite number");
    if (sample_min < m_min) throw parameter_error("all values must be >= m_min");

    double log_sum = 0.0;
    for (double v : list.values) log_sum += std::log(v / m_min);
    if (!(log_sum > 0.0))
        throw divergent_estimate_error("all values equal m_min; the log-sum is zero");

    const double alpha_hat = static_cast<double>(n) / log_sum;
    return HillFit{alpha_hat, alpha_hat / std::sqrt(static_cast<double>(n)), n, m_min};
}

BootstrapCi bootstrap_ci(const RankList& list, FitMethod method, std::size_t replicates,
                         double level, std::uint64_t seed) {
    if (replicates < 1) throw parameter_error("replicates must be at least 1");
    if (!(level > 0.0 && level < 1.0)) throw parameter_error("level must lie in (0,1)");
    const std::size_t n = list.values.size();
    if (n == 0) throw empty_input_error("cannot bootstrap an empty list");

    const double point = fit_alpha(list, method);

    std::uint64_t seed_state = seed;
    std::vector<double> estimates;
    estimates.reserve(replicates);
    std::size_t failures = 0;

    RankList replica;
    replica.key = list.key;
    replica.values.resize(n);
    for (std::size_t b = 0; b < replicates; ++b) {
        std::mt19937_64 gen(detail::splitmix64(seed_state));
        for (std::size_t i = 0; i < n; ++i)
            replica.values[i] = list.values[detail::bounded_index(gen, n)];
        std::sort(replica.values.begin(), replica.values.end(), std::greater<>());
        try {
            estimates.push_back(fit_alpha(replica, method));
        } catch (const degenerate_input_error&) {
            ++failures;
        } catch (const degenerate_fit_error&) {
            ++failures;
        } catch (const divergent_estimate_error&) {
            ++failures;
        }
    }
    if (failures * 2 > replicates)
        throw bootstrap_failure_error(std::to_string(failures) + " of " +
                                      std::to_string(replicates) +
                                      " bootstrap replicates failed");

    std::sort(estimates.begin(), estimates.end());
    const double tail = (1.0 - level) / 2.0;
    return BootstrapCi{sorted_quantile(estimates, tail), sorted_quantile(estimates, 1.0 - tail),
                       level, replicates, point, failures};
}

}  // namespace tailfit
