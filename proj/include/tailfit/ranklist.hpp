#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tailfit {

enum class Kind { income, wealth };

const char* to_string(Kind kind);

/// Case-insensitive; nullopt for anything but "income"/"wealth".
std::optional<Kind> parse_kind(std::string_view text);

/// Identifies one ranked list: (region, year, kind). Region strings are
/// opaque UTF-8 and order by byte value.
struct GroupKey {
    std::string region;
    int year = 0;
    Kind kind = Kind::income;

    auto operator<=>(const GroupKey&) const = default;
};

/// Top-k list of positive values, largest first.
struct RankList {
    GroupKey key;
    std::vector<double> values;
    std::optional<std::size_t> population;  // full underlying population, when known
};

struct CcdfPoint {
    double value;
    double probability;  // fraction of the sample >= value
};

/// Step-function survival estimates, one point per distinct value,
/// descending in value.
struct EmpiricalCcdf {
    std::vector<CcdfPoint> points;
};

/// Sorts raw descending and validates positivity. The reported index of a
/// rejected value refers to the input order.
RankList from_values(GroupKey key, std::vector<double> raw);

/// Survival estimate r/N at each distinct value, where r is the deepest
/// rank among tied entries.
EmpiricalCcdf empirical_ccdf(const RankList& list);

/// Keeps the min(k, N) largest values; k must be at least 1.
RankList truncate_top(const RankList& list, std::size_t k);

struct PlotPoint {
    double ln_rank;
    double ln_value;
};

/// (ln r, ln m_r) for r = 1..N, rank 1 = largest value.
std::vector<PlotPoint> plot_points(const RankList& list);

}  // namespace tailfit
