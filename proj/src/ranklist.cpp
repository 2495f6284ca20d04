#include "tailfit/ranklist.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>

#include "tailfit/errors.hpp"

namespace tailfit {

const char* to_string(Kind kind) { return kind == Kind::income ? "income" : "wealth"; }

std::optional<Kind> parse_kind(std::string_view text) {
    std::string lower(text);
    for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower == "income") return Kind::income;
    if (lower == "wealth") return Kind::wealth;
    return std::nullopt;
}

RankList from_values(GroupKey key, std::vector<double> raw) {
    if (raw.empty()) throw empty_input_error("rank list input is empty");
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (!(std::isfinite(raw[i]) && raw[i] > 0.0))
            throw validation_error(
                "value at index " + std::to_string(i) + " must be a positive finite number", i);
    }
    std::sort(raw.begin(), raw.end(), std::greater<>());
    return RankList{std::move(key), std::move(raw), std::nullopt};
}

EmpiricalCcdf empirical_ccdf(const RankList& list) {
    const std::size_t n = list.values.size();
    EmpiricalCcdf out;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;  // extend over ties; the deepest rank wins
        while (j + 1 < n && list.values[j + 1] == list.values[i]) ++j;
        out.points.push_back(
            {list.values[i], static_cast<double>(j + 1) / static_cast<double>(n)});
        i = j + 1;
    }
    return out;
}

RankList truncate_top(const RankList& list, std::size_t k) {
    if (k == 0) throw parameter_error("k must be at least 1");
    RankList out;
    out.key = list.key;
    out.population = list.population;
    const std::size_t kept = std::min(k, list.values.size());
    out.values.assign(list.values.begin(), list.values.begin() + static_cast<std::ptrdiff_t>(kept));
    return out;
}

std::vector<PlotPoint> plot_points(const RankList& list) {
    std::vector<PlotPoint> points;
    points.reserve(list.values.size());
    for (std::size_t r = 1; r <= list.values.size(); ++r)
        points.push_back({std::log(static_cast<double>(r)), std::log(list.values[r - 1])});
    return points;
}

}  // namespace tailfit
