#include "tailfit/aggregate.hpp"

#include <cmath>

#include "tailfit/errors.hpp"

namespace tailfit {

namespace {

SummaryStats stats_of(const std::vector<double>& xs) {
    const auto n = static_cast<double>(xs.size());
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= n;
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return SummaryStats{mean, std::sqrt(ss / n), xs.size()};
}

}  // namespace

SummaryStats summarize_regions(const ExponentTable& table, int year, Kind kind,
                               const std::string& aggregate_label) {
    std::vector<double> alphas;
    for (const auto& [key, row] : table.rows())
        if (key.year == year && key.kind == kind && key.region != aggregate_label)
            alphas.push_back(row.alpha);
    if (alphas.empty())
        throw empty_selection_error("no region rows for year " + std::to_string(year) + ", " +
                                    to_string(kind));
    return stats_of(alphas);
}

SummaryStats four_year_summary(const ExponentTable& table, Kind kind,
                               const std::string& aggregate_label) {
    std::vector<double> alphas;
    for (const auto& [key, row] : table.rows())
        if (key.kind == kind && key.region != aggregate_label) alphas.push_back(row.alpha);
    if (alphas.empty())
        throw empty_selection_error(std::string("no region rows of kind ") + to_string(kind));
    return stats_of(alphas);
}

std::vector<ComparisonRow> compare_income_wealth(const ExponentTable& table,
                                                 const std::string& aggregate_label) {
    std::vector<ComparisonRow> out;
    for (const auto& [key, row] : table.rows()) {
        if (key.kind != Kind::income || key.region == aggregate_label) continue;
        const ExponentRow* wealth = table.find({key.region, key.year, Kind::wealth});
        if (!wealth) continue;
        out.push_back(
            {key.region, key.year, row.alpha, wealth->alpha, wealth->alpha < row.alpha});
    }
    if (out.empty())
        throw empty_selection_error("no (region, year) has both an income and a wealth row");
    return out;
}

double temporal_fluctuation(const ExponentTable& table, Kind kind,
                            const std::string& aggregate_label) {
    std::map<std::string, std::vector<double>> by_region;
    for (const auto& [key, row] : table.rows())
        if (key.kind == kind && key.region != aggregate_label)
            by_region[key.region].push_back(row.alpha);

    double sum = 0.0;
    std::size_t counted = 0;
    for (const auto& [region, alphas] : by_region) {
        if (alphas.size() < 2) continue;  // no temporal variation measurable
        sum += stats_of(alphas).dispersion;
        ++counted;
    }
    if (counted == 0)
        throw empty_selection_error("no region has exponents for two or more years");
    return sum / static_cast<double>(counted);
}

}  // namespace tailfit
