#include "tailfit/pareto.hpp"

#include <cmath>

#include "tailfit/detail/rng.hpp"
#include "tailfit/errors.hpp"

namespace tailfit {

void validate(const ParetoParams& params) {
    if (!(std::isfinite(params.m0) && params.m0 > 0.0))
        throw parameter_error("m0 must be a positive finite number");
    if (!(std::isfinite(params.alpha) && params.alpha > 0.0))
        throw parameter_error("alpha must be a positive finite number");
}

double pdf(const ParetoParams& params, double m) {
    validate(params);
    if (m < params.m0) return 0.0;
    return params.alpha / params.m0 * std::pow(params.m0 / m, params.alpha + 1.0);
}

double ccdf(const ParetoParams& params, double m) {
    validate(params);
    if (m < params.m0) return 1.0;
    return std::pow(m / params.m0, -params.alpha);
}

double inverse_survival(const ParetoParams& params, double u) {
    validate(params);
    if (!(u > 0.0 && u <= 1.0)) throw parameter_error("tail probability must lie in (0,1]");
    return params.m0 * std::pow(u, -1.0 / params.alpha);
}

double quantile(const ParetoParams& params, double p) {
    validate(params);
    if (!(p >= 0.0 && p < 1.0)) throw parameter_error("p must lie in [0,1)");
    return params.m0 * std::pow(1.0 - p, -1.0 / params.alpha);
}

double median(const ParetoParams& params) { return quantile(params, 0.5); }

std::optional<double> moment(const ParetoParams& params, double k) {
    validate(params);
    if (!(std::isfinite(k) && k >= 0.0)) throw parameter_error("moment order must be >= 0");
    if (k >= params.alpha) return std::nullopt;  // divergent
    return params.alpha * std::pow(params.m0, k) / (params.alpha - k);
}

std::vector<double> sample(const ParetoParams& params, std::size_t n, std::uint64_t seed) {
    validate(params);
    const double neg_inv_alpha = -1.0 / params.alpha;
    std::vector<double> draws;
    draws.reserve(n);
    std::mt19937_64 gen(seed);
    for (std::size_t i = 0; i < n; ++i) {
        // flip [0,1) into (0,1] so u == 1 lands on m0 exactly
        const double u = 1.0 - detail::uniform53(gen);
        draws.push_back(params.m0 * std::pow(u, neg_inv_alpha));
    }
    return draws;
}

}  // namespace tailfit
