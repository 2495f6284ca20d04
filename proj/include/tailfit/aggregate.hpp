#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tailfit/ranklist.hpp"

namespace tailfit {

struct ExponentRow {
    double alpha;
    std::optional<double> std_error;
};

/// One tail exponent per (region, year, kind), kept in key order.
class ExponentTable {
public:
    /// Inserts or replaces the row for `key`.
    void set(const GroupKey& key, ExponentRow row) { rows_[key] = row; }

    /// nullptr when the key is absent.
    const ExponentRow* find(const GroupKey& key) const {
        auto it = rows_.find(key);
        return it == rows_.end() ? nullptr : &it->second;
    }

    const std::map<GroupKey, ExponentRow>& rows() const { return rows_; }
    std::size_t size() const { return rows_.size(); }

private:
    std::map<GroupKey, ExponentRow> rows_;
};

/// Region label of the whole-country rows, excluded from per-region
/// summaries.
inline constexpr const char* default_aggregate_label = "NORWAY";

struct SummaryStats {
    double mean;
    double dispersion;  // population standard deviation
    std::size_t n;
};

struct ComparisonRow {
    std::string region;
    int year;
    double income_alpha;
    double wealth_alpha;
    bool wealth_lower;  // strict; a tie counts as not lower
};

/// Mean and population sd of the exponents over all region rows for one
/// (year, kind). Rows whose region equals aggregate_label are excluded.
SummaryStats summarize_regions(const ExponentTable& table, int year, Kind kind,
                               const std::string& aggregate_label = default_aggregate_label);

/// Pooled mean and population sd over every region row of the given kind,
/// across all years present in the table.
SummaryStats four_year_summary(const ExponentTable& table, Kind kind,
                               const std::string& aggregate_label = default_aggregate_label);

/// Pairs the income and wealth exponents per (region, year); rows missing
/// either kind are dropped. Ordered by (region, year).
std::vector<ComparisonRow> compare_income_wealth(
    const ExponentTable& table, const std::string& aggregate_label = default_aggregate_label);

/// Mean over regions of the population sd of each region's exponent across
/// the years present. Regions observed in fewer than two years are skipped.
double temporal_fluctuation(const ExponentTable& table, Kind kind,
                            const std::string& aggregate_label = default_aggregate_label);

}  // namespace tailfit
