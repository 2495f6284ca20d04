#include "tailfit/csv.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <initializer_list>
#include <istream>
#include <ostream>

namespace tailfit {

namespace {

std::vector<std::string> split_line(const std::string& line, char delimiter) {
    std::vector<std::string> fields;
    std::string::size_type start = 0;
    while (true) {
        const auto pos = line.find(delimiter, start);
        if (pos == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

// getline with trailing-CR stripping, so CRLF files parse too.
bool read_line(std::istream& in, std::string& line) {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

struct Header {
    std::map<std::string, std::size_t> columns;
    std::size_t count = 0;

    bool has(const std::string& name) const { return columns.count(name) != 0; }
    std::size_t at(const std::string& name) const { return columns.at(name); }
};

Header read_header(std::istream& in, char delimiter,
                   std::initializer_list<const char*> required) {
    std::string line;
    if (!read_line(in, line)) throw csv_error("no records (missing header line)", 1);
    if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);  // UTF-8 BOM
    const auto fields = split_line(line, delimiter);
    Header header;
    header.count = fields.size();
    for (std::size_t i = 0; i < fields.size(); ++i) header.columns[lower(fields[i])] = i;
    for (const char* name : required)
        if (!header.has(name))
            throw csv_error(std::string("missing required column '") + name + "'", 1);
    return header;
}

int parse_year(const std::string& text, std::size_t line_no) {
    const auto year = try_parse_int(text);
    if (!year) throw csv_error("year '" + text + "' is not an integer", line_no);
    return static_cast<int>(*year);
}

Kind parse_kind_field(const std::string& text, std::size_t line_no) {
    const auto kind = parse_kind(text);
    if (!kind) throw csv_error("kind '" + text + "' must be 'income' or 'wealth'", line_no);
    return *kind;
}

std::string describe(const GroupKey& key) {
    return key.region + "/" + std::to_string(key.year) + "/" + to_string(key.kind);
}

}  // namespace

std::vector<RecordRow> read_records(std::istream& in, const CsvOptions& opt) {
    const Header header = read_header(in, opt.delimiter, {"region", "year", "kind", "value"});
    const bool has_rank = header.has("rank");

    std::vector<RecordRow> rows;
    std::string line;
    std::size_t line_no = 1;
    while (read_line(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto fields = split_line(line, opt.delimiter);
        if (fields.size() != header.count)
            throw csv_error("expected " + std::to_string(header.count) + " fields, got " +
                                std::to_string(fields.size()),
                            line_no);

        RecordRow row;
        row.region = fields[header.at("region")];
        row.year = parse_year(fields[header.at("year")], line_no);
        row.kind = parse_kind_field(fields[header.at("kind")], line_no);

        const auto value = try_parse_double(fields[header.at("value")]);
        if (!value || !(std::isfinite(*value) && *value > 0.0))
            throw csv_error("value '" + fields[header.at("value")] + "' must be a positive number",
                            line_no);
        row.value = *value;

        if (has_rank) {
            const std::string& field = fields[header.at("rank")];
            if (!field.empty()) {
                const auto rank = try_parse_int(field);
                if (!rank || *rank < 1)
                    throw csv_error("rank '" + field + "' must be a positive integer", line_no);
                row.rank = static_cast<std::size_t>(*rank);
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_records(std::ostream& out, const std::vector<RecordRow>& rows,
                   const NumberFormat& fmt, const CsvOptions& opt) {
    const char d = opt.delimiter;
    out << "region" << d << "year" << d << "kind" << d << "rank" << d << "value\n";
    for (const RecordRow& row : rows) {
        out << row.region << d << format_int(row.year) << d << to_string(row.kind) << d;
        if (row.rank) out << format_size(*row.rank);
        out << d << format_double(row.value, fmt) << "\n";
    }
}

std::vector<RankList> group_records(const std::vector<RecordRow>& rows) {
    std::map<GroupKey, std::vector<const RecordRow*>> groups;
    for (const RecordRow& row : rows)
        groups[GroupKey{row.region, row.year, row.kind}].push_back(&row);

    std::vector<RankList> lists;
    lists.reserve(groups.size());
    for (const auto& [key, members] : groups) {
        const std::size_t n = members.size();
        const std::size_t with_rank = static_cast<std::size_t>(
            std::count_if(members.begin(), members.end(),
                          [](const RecordRow* m) { return m->rank.has_value(); }));

        RankList list;
        list.key = key;
        list.values.reserve(n);
        if (with_rank == 0) {
            for (const RecordRow* m : members) list.values.push_back(m->value);
            std::sort(list.values.begin(), list.values.end(), std::greater<>());
        } else if (with_rank == n) {
            std::vector<const RecordRow*> by_rank(n, nullptr);
            for (const RecordRow* m : members) {
                const std::size_t r = *m->rank;
                if (r > n)
                    throw validation_error(describe(key) + ": rank " + std::to_string(r) +
                                               " exceeds group size " + std::to_string(n),
                                           r);
                if (by_rank[r - 1])
                    throw validation_error(
                        describe(key) + ": duplicate rank " + std::to_string(r), r);
                by_rank[r - 1] = m;
            }
            for (std::size_t i = 0; i < n; ++i) {
                list.values.push_back(by_rank[i]->value);
                if (i > 0 && list.values[i] > list.values[i - 1])
                    throw validation_error(
                        describe(key) + ": ranks disagree with descending value order at rank " +
                            std::to_string(i + 1),
                        i + 1);
            }
        } else {
            throw validation_error(
                describe(key) + ": ranks must be given for all rows of a group or none", 0);
        }
        lists.push_back(std::move(list));
    }
    return lists;
}

ExponentTable read_exponent_table(std::istream& in, const CsvOptions& opt) {
    const Header header = read_header(in, opt.delimiter, {"region", "year", "kind", "alpha"});
    const bool has_stderr = header.has("stderr");

    ExponentTable table;
    std::string line;
    std::size_t line_no = 1;
    while (read_line(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto fields = split_line(line, opt.delimiter);
        if (fields.size() != header.count)
            throw csv_error("expected " + std::to_string(header.count) + " fields, got " +
                                std::to_string(fields.size()),
                            line_no);

        const std::string& alpha_text = fields[header.at("alpha")];
        if (alpha_text.empty()) continue;  // fit rows for degenerate groups carry no estimate

        const GroupKey key{fields[header.at("region")],
                           parse_year(fields[header.at("year")], line_no),
                           parse_kind_field(fields[header.at("kind")], line_no)};
        const auto alpha = try_parse_double(alpha_text);
        if (!alpha || !(std::isfinite(*alpha) && *alpha > 0.0))
            throw csv_error("alpha '" + alpha_text + "' must be a positive number", line_no);

        std::optional<double> std_error;
        if (has_stderr) {
            const std::string& field = fields[header.at("stderr")];
            if (!field.empty()) {
                const auto se = try_parse_double(field);
                if (!se || !(std::isfinite(*se) && *se >= 0.0))
                    throw csv_error("stderr '" + field + "' must be a nonnegative number",
                                    line_no);
                std_error = *se;
            }
        }
        if (table.find(key))
            throw csv_error("duplicate row for " + describe(key), line_no);
        table.set(key, {*alpha, std_error});
    }
    return table;
}

void write_exponent_table(std::ostream& out, const ExponentTable& table,
                          const NumberFormat& fmt, const CsvOptions& opt) {
    const char d = opt.delimiter;
    const bool any_stderr =
        std::any_of(table.rows().begin(), table.rows().end(),
                    [](const auto& kv) { return kv.second.std_error.has_value(); });
    out << "region" << d << "year" << d << "kind" << d << "alpha";
    if (any_stderr) out << d << "stderr";
    out << "\n";
    for (const auto& [key, row] : table.rows()) {
        out << key.region << d << format_int(key.year) << d << to_string(key.kind) << d
            << format_double(row.alpha, fmt);
        if (any_stderr) {
            out << d;
            if (row.std_error) out << format_double(*row.std_error, fmt);
        }
        out << "\n";
    }
}

}  // namespace tailfit
