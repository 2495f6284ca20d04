#include "tailfit/synth.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace tailfit {

RankList generate_ranklist(const ParetoParams& params, std::size_t n, std::uint64_t seed,
                           GroupKey key) {
    return from_values(std::move(key), sample(params, n, seed));
}

RankList generate_exact_ranksize(const ParetoParams& params, std::size_t n, GroupKey key) {
    validate(params);
    const double inv_alpha = 1.0 / params.alpha;
    std::vector<double> values;
    values.reserve(n);
    for (std::size_t r = 1; r <= n; ++r)
        values.push_back(params.m0 *
                         std::pow(static_cast<double>(n) / static_cast<double>(r), inv_alpha));
    return from_values(std::move(key), std::move(values));
}

}  // namespace tailfit
