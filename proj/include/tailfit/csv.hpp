#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tailfit/aggregate.hpp"
#include "tailfit/errors.hpp"
#include "tailfit/numeric.hpp"
#include "tailfit/ranklist.hpp"

namespace tailfit {

/// Malformed CSV input; carries the 1-based line number.
class csv_error : public error {
public:
    csv_error(const std::string& what, std::size_t line)
        : error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// One row of the `region,year,kind,rank,value` schema. rank is optional
/// on input and recomputed by sorting when absent.
struct RecordRow {
    std::string region;
    int year = 0;
    Kind kind = Kind::income;
    std::optional<std::size_t> rank;
    double value = 0.0;
};

struct CsvOptions {
    char delimiter = ',';
};

/// Header-driven reader; requires region, year, kind, value columns (rank
/// optional, extra columns ignored). Values must be positive.
std::vector<RecordRow> read_records(std::istream& in, const CsvOptions& opt = {});

void write_records(std::ostream& out, const std::vector<RecordRow>& rows,
                   const NumberFormat& fmt = {}, const CsvOptions& opt = {});

/// Groups rows by (region, year, kind) into descending-sorted rank lists,
/// returned in key order. When a group carries explicit ranks they must
/// cover 1..N and agree with descending value order.
std::vector<RankList> group_records(const std::vector<RecordRow>& rows);

/// Reads `region,year,kind,alpha[,stderr]` rows (extra columns ignored).
/// Rows with an empty alpha field are skipped, so fit reports containing
/// failed groups can be fed back in.
ExponentTable read_exponent_table(std::istream& in, const CsvOptions& opt = {});

void write_exponent_table(std::ostream& out, const ExponentTable& table,
                          const NumberFormat& fmt = {}, const CsvOptions& opt = {});

}  // namespace tailfit
