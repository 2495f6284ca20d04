#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace tailfit {

/// Scale and tail exponent of the power-law density
///   p(m) = (alpha/m0) * (m0/m)^(alpha+1)  for m >= m0, 0 below.
struct ParetoParams {
    double m0;     // lowest value of the variable (currency units)
    double alpha;  // tail exponent
};

/// Exponent of the strongest power law, alpha = 3/2.
inline constexpr double strongest_alpha = 1.5;

/// Throws parameter_error unless m0 and alpha are positive and finite.
void validate(const ParetoParams& params);

double pdf(const ParetoParams& params, double m);

/// Survival function: probability of exceeding m. Equals 1 below m0 (all
/// mass lies above the scale).
double ccdf(const ParetoParams& params, double m);

/// Value exceeded with tail probability u: m0 * u^(-1/alpha), u in (0,1].
/// This is the transform behind sample(); u = 1 maps to m0 exactly.
double inverse_survival(const ParetoParams& params, double u);

/// Lower-tail quantile, p in [0,1). quantile(params, 0) == m0.
double quantile(const ParetoParams& params, double p);

double median(const ParetoParams& params);

/// k-th raw moment, k >= 0. Returns nullopt when the moment diverges,
/// which happens for every k >= alpha.
std::optional<double> moment(const ParetoParams& params, double k);

/// n inverse-transform draws; identical output for equal (params, n, seed).
std::vector<double> sample(const ParetoParams& params, std::size_t n, std::uint64_t seed);

}  // namespace tailfit
