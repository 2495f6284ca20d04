// Command-line front end: CSV ingestion, tail-exponent fitting, summary
// statistics, synthetic data generation, and log-log plot data emission.

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tailfit/aggregate.hpp"
#include "tailfit/csv.hpp"
#include "tailfit/detail/rng.hpp"
#include "tailfit/errors.hpp"
#include "tailfit/estimators.hpp"
#include "tailfit/numeric.hpp"
#include "tailfit/pareto.hpp"
#include "tailfit/synth.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitNoResult = 1;
constexpr int kExitInputError = 2;
constexpr int kExitPartialFailure = 3;

struct CommonOptions {
    std::string input = "-";
    std::string output = "-";
    std::string format = "csv";
    std::string delimiter = ",";
    std::string precision = "6";
};

void add_output_options(CLI::App& cmd, CommonOptions& opt) {
    cmd.add_option("-o,--output", opt.output, "output path, or - for stdout");
    cmd.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd.add_option("--delimiter", opt.delimiter, "CSV field delimiter (single character)");
    cmd.add_option("--precision", opt.precision,
                   "significant digits (1-17) or 'full' for exact round-trip");
}

void add_io_options(CLI::App& cmd, CommonOptions& opt) {
    cmd.add_option("-i,--input", opt.input, "input CSV path, or - for stdin");
    add_output_options(cmd, opt);
}

tailfit::NumberFormat parse_precision(const std::string& text) {
    if (text == "full") return {17, true};
    const auto digits = tailfit::try_parse_int(text);
    if (!digits || *digits < 1 || *digits > 17)
        throw tailfit::parameter_error("--precision must be an integer in [1,17] or 'full'");
    return {static_cast<int>(*digits), false};
}

char parse_delimiter(const std::string& text) {
    if (text.size() != 1)
        throw tailfit::parameter_error("--delimiter must be a single character");
    return text[0];
}

std::string read_input(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw tailfit::error("cannot open input file: " + path);
        buffer << in.rdbuf();
    }
    return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw tailfit::error("cannot open output file: " + path);
    out << text;
}

// ---------------------------------------------------------------------------
// fit

struct FitOptions {
    CommonOptions io;
    std::string method = "rank";
    std::size_t bootstrap = 0;
    double level = 0.95;
    std::uint64_t seed = 0;
};

struct FitRow {
    tailfit::GroupKey key;
    std::size_t n = 0;
    std::optional<tailfit::RankFit> rank;
    std::optional<tailfit::HillFit> hill;
    std::optional<tailfit::BootstrapCi> ci;
    std::string error;
};

std::string render_fit_csv(const std::vector<FitRow>& rows, bool hill_method, bool with_ci,
                           const tailfit::NumberFormat& fmt, char d) {
    std::ostringstream out;
    out << "region" << d << "year" << d << "kind" << d << "n" << d;
    if (hill_method)
        out << "alpha" << d << "stderr" << d << "m_min";
    else
        out << "alpha_rank" << d << "alpha" << d << "stderr" << d << "intercept" << d
            << "r_squared";
    if (with_ci) out << d << "ci_lower" << d << "ci_upper";
    out << d << "error\n";

    for (const FitRow& row : rows) {
        out << row.key.region << d << tailfit::format_int(row.key.year) << d
            << tailfit::to_string(row.key.kind) << d << tailfit::format_size(row.n) << d;
        const auto cell = [&](double v) { return tailfit::format_double(v, fmt); };
        if (hill_method) {
            if (row.hill)
                out << cell(row.hill->alpha_hat) << d << cell(row.hill->std_error) << d
                    << cell(row.hill->m_min);
            else
                out << d << d;
        } else {
            if (row.rank)
                out << cell(row.rank->alpha_rank) << d << cell(row.rank->alpha) << d
                    << cell(row.rank->stderr_alpha) << d << cell(row.rank->intercept) << d
                    << cell(row.rank->r_squared);
            else
                out << d << d << d << d;
        }
        if (with_ci) {
            out << d;
            if (row.ci) out << cell(row.ci->lower);
            out << d;
            if (row.ci) out << cell(row.ci->upper);
        }
        out << d << row.error << "\n";
    }
    return out.str();
}

std::string render_fit_json(const std::vector<FitRow>& rows, bool hill_method, bool with_ci) {
    ordered_json arr = ordered_json::array();
    for (const FitRow& row : rows) {
        ordered_json obj;
        obj["region"] = row.key.region;
        obj["year"] = row.key.year;
        obj["kind"] = tailfit::to_string(row.key.kind);
        obj["n"] = row.n;
        if (hill_method) {
            obj["alpha"] = row.hill ? ordered_json(row.hill->alpha_hat) : nullptr;
            obj["stderr"] = row.hill ? ordered_json(row.hill->std_error) : nullptr;
            obj["m_min"] = row.hill ? ordered_json(row.hill->m_min) : nullptr;
        } else {
            obj["alpha_rank"] = row.rank ? ordered_json(row.rank->alpha_rank) : nullptr;
            obj["alpha"] = row.rank ? ordered_json(row.rank->alpha) : nullptr;
            obj["stderr"] = row.rank ? ordered_json(row.rank->stderr_alpha) : nullptr;
            obj["intercept"] = row.rank ? ordered_json(row.rank->intercept) : nullptr;
            obj["r_squared"] = row.rank ? ordered_json(row.rank->r_squared) : nullptr;
        }
        if (with_ci) {
            obj["ci_lower"] = row.ci ? ordered_json(row.ci->lower) : nullptr;
            obj["ci_upper"] = row.ci ? ordered_json(row.ci->upper) : nullptr;
        }
        obj["error"] = row.error;
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

int run_fit(const FitOptions& opt) {
    const auto fmt = parse_precision(opt.io.precision);
    const tailfit::CsvOptions csv{parse_delimiter(opt.io.delimiter)};
    std::istringstream in(read_input(opt.io.input));
    const auto records = tailfit::read_records(in, csv);
    if (records.empty()) {
        std::cerr << "error: no records\n";
        return kExitInputError;
    }
    const auto groups = tailfit::group_records(records);
    const bool hill_method = opt.method == "hill";

    std::uint64_t seed_state = opt.seed;
    std::vector<FitRow> rows;
    rows.reserve(groups.size());
    std::size_t failed = 0;
    for (const tailfit::RankList& list : groups) {
        const std::uint64_t group_seed = tailfit::detail::splitmix64(seed_state);
        FitRow row;
        row.key = list.key;
        row.n = list.values.size();
        try {
            if (hill_method)
                row.hill = tailfit::fit_hill(list);
            else
                row.rank = tailfit::fit_rank_regression(list);
            if (opt.bootstrap > 0)
                row.ci = tailfit::bootstrap_ci(
                    list,
                    hill_method ? tailfit::FitMethod::hill : tailfit::FitMethod::rank_regression,
                    opt.bootstrap, opt.level, group_seed);
        } catch (const tailfit::error& e) {
            row.rank.reset();
            row.hill.reset();
            row.ci.reset();
            row.error = e.what();
            ++failed;
        }
        rows.push_back(std::move(row));
    }

    const bool with_ci = opt.bootstrap > 0;
    write_output(opt.io.output, opt.io.format == "json"
                                    ? render_fit_json(rows, hill_method, with_ci)
                                    : render_fit_csv(rows, hill_method, with_ci, fmt,
                                                     csv.delimiter));
    if (failed == rows.size()) return kExitNoResult;
    if (failed > 0) return kExitPartialFailure;
    return kExitOk;
}

// ---------------------------------------------------------------------------
// summarize

struct SummarizeOptions {
    CommonOptions io;
    std::string aggregate_label = tailfit::default_aggregate_label;
};

struct SummaryReport {
    // (year, kind) -> stats over region rows
    std::vector<std::tuple<int, tailfit::Kind, tailfit::SummaryStats>> by_year;
    // kind -> pooled stats over all years
    std::vector<std::pair<tailfit::Kind, tailfit::SummaryStats>> pooled;
    std::vector<tailfit::ComparisonRow> pairs;
};

std::string render_summary_csv(const SummaryReport& report, const tailfit::NumberFormat& fmt,
                               char d) {
    std::ostringstream out;
    out << "section" << d << "region" << d << "year" << d << "kind" << d << "mean" << d
        << "dispersion" << d << "n" << d << "income_alpha" << d << "wealth_alpha" << d
        << "wealth_lower\n";
    const auto cell = [&](double v) { return tailfit::format_double(v, fmt); };
    for (const auto& [year, kind, stats] : report.by_year)
        out << "by_year" << d << d << tailfit::format_int(year) << d << tailfit::to_string(kind)
            << d << cell(stats.mean) << d << cell(stats.dispersion) << d
            << tailfit::format_size(stats.n) << d << d << d << "\n";
    for (const auto& [kind, stats] : report.pooled)
        out << "pooled" << d << d << d << tailfit::to_string(kind) << d << cell(stats.mean) << d
            << cell(stats.dispersion) << d << tailfit::format_size(stats.n) << d << d << d
            << "\n";
    for (const tailfit::ComparisonRow& pair : report.pairs)
        out << "pair" << d << pair.region << d << tailfit::format_int(pair.year) << d << d << d
            << d << d << cell(pair.income_alpha) << d << cell(pair.wealth_alpha) << d
            << (pair.wealth_lower ? "true" : "false") << "\n";
    return out.str();
}

std::string render_summary_json(const SummaryReport& report) {
    ordered_json arr = ordered_json::array();
    for (const auto& [year, kind, stats] : report.by_year) {
        ordered_json obj;
        obj["section"] = "by_year";
        obj["year"] = year;
        obj["kind"] = tailfit::to_string(kind);
        obj["mean"] = stats.mean;
        obj["dispersion"] = stats.dispersion;
        obj["n"] = stats.n;
        arr.push_back(std::move(obj));
    }
    for (const auto& [kind, stats] : report.pooled) {
        ordered_json obj;
        obj["section"] = "pooled";
        obj["kind"] = tailfit::to_string(kind);
        obj["mean"] = stats.mean;
        obj["dispersion"] = stats.dispersion;
        obj["n"] = stats.n;
        arr.push_back(std::move(obj));
    }
    for (const tailfit::ComparisonRow& pair : report.pairs) {
        ordered_json obj;
        obj["section"] = "pair";
        obj["region"] = pair.region;
        obj["year"] = pair.year;
        obj["income_alpha"] = pair.income_alpha;
        obj["wealth_alpha"] = pair.wealth_alpha;
        obj["wealth_lower"] = pair.wealth_lower;
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

int run_summarize(const SummarizeOptions& opt) {
    const auto fmt = parse_precision(opt.io.precision);
    const tailfit::CsvOptions csv{parse_delimiter(opt.io.delimiter)};
    std::istringstream in(read_input(opt.io.input));
    const tailfit::ExponentTable table = tailfit::read_exponent_table(in, csv);
    if (table.size() == 0) {
        std::cerr << "error: no records\n";
        return kExitInputError;
    }

    std::set<std::pair<int, tailfit::Kind>> cells;
    std::set<tailfit::Kind> kinds;
    for (const auto& [key, row] : table.rows()) {
        if (key.region == opt.aggregate_label) continue;
        cells.insert({key.year, key.kind});
        kinds.insert(key.kind);
    }
    if (cells.empty()) {
        std::cerr << "error: every row matches the aggregate label '" << opt.aggregate_label
                  << "'\n";
        return kExitNoResult;
    }

    SummaryReport report;
    for (const auto& [year, kind] : cells)
        report.by_year.emplace_back(year, kind,
                                    summarize_regions(table, year, kind, opt.aggregate_label));
    for (const tailfit::Kind kind : kinds)
        report.pooled.emplace_back(kind, four_year_summary(table, kind, opt.aggregate_label));
    try {
        report.pairs = compare_income_wealth(table, opt.aggregate_label);
    } catch (const tailfit::empty_selection_error&) {
        // single-kind tables have no pairs to report
    }

    write_output(opt.io.output, opt.io.format == "json"
                                    ? render_summary_json(report)
                                    : render_summary_csv(report, fmt, csv.delimiter));
    return kExitOk;
}

// ---------------------------------------------------------------------------
// plot-data

struct PlotOptions {
    CommonOptions io;
    std::string region;
    int year = 0;
    std::string kind;
    bool has_region = false;
    bool has_year = false;
    bool has_kind = false;
};

int run_plotdata(const PlotOptions& opt) {
    const auto fmt = parse_precision(opt.io.precision);
    const tailfit::CsvOptions csv{parse_delimiter(opt.io.delimiter)};
    std::istringstream in(read_input(opt.io.input));
    const auto records = tailfit::read_records(in, csv);
    if (records.empty()) {
        std::cerr << "error: no records\n";
        return kExitInputError;
    }
    std::optional<tailfit::Kind> kind;
    if (opt.has_kind) {
        kind = tailfit::parse_kind(opt.kind);
        if (!kind) throw tailfit::parameter_error("--kind must be 'income' or 'wealth'");
    }

    std::vector<tailfit::RankList> groups = tailfit::group_records(records);
    std::erase_if(groups, [&](const tailfit::RankList& list) {
        if (opt.has_region && list.key.region != opt.region) return true;
        if (opt.has_year && list.key.year != opt.year) return true;
        if (kind && list.key.kind != *kind) return true;
        return false;
    });
    if (groups.empty()) {
        std::cerr << "error: no group matches the selector\n";
        return kExitNoResult;
    }
    if (groups.size() > 1) {
        std::cerr << "error: selector matches " << groups.size()
                  << " groups; narrow it with --region/--year/--kind\n";
        return kExitNoResult;
    }

    const tailfit::RankList& list = groups.front();
    const auto points = tailfit::plot_points(list);
    std::optional<tailfit::RankFit> fit;
    std::string fit_error;
    try {
        fit = tailfit::fit_rank_regression(list);
    } catch (const tailfit::error& e) {
        fit_error = e.what();
    }

    const auto cell = [&](double v) { return tailfit::format_double(v, fmt); };
    std::string text;
    if (opt.io.format == "json") {
        ordered_json obj;
        obj["region"] = list.key.region;
        obj["year"] = list.key.year;
        obj["kind"] = tailfit::to_string(list.key.kind);
        obj["n"] = list.values.size();
        obj["slope"] = fit ? ordered_json(-fit->alpha_rank) : nullptr;
        obj["intercept"] = fit ? ordered_json(fit->intercept) : nullptr;
        obj["alpha_rank"] = fit ? ordered_json(fit->alpha_rank) : nullptr;
        obj["alpha"] = fit ? ordered_json(fit->alpha) : nullptr;
        obj["r_squared"] = fit ? ordered_json(fit->r_squared) : nullptr;
        ordered_json pts = ordered_json::array();
        for (const tailfit::PlotPoint& p : points)
            pts.push_back(ordered_json{{"ln_rank", p.ln_rank}, {"ln_value", p.ln_value}});
        obj["points"] = std::move(pts);
        text = obj.dump(2) + "\n";
    } else {
        std::ostringstream out;
        const char d = csv.delimiter;
        out << "# region=" << list.key.region << " year=" << tailfit::format_int(list.key.year)
            << " kind=" << tailfit::to_string(list.key.kind)
            << " n=" << tailfit::format_size(list.values.size()) << "\n";
        if (fit)
            out << "# slope=" << cell(-fit->alpha_rank) << " intercept=" << cell(fit->intercept)
                << " alpha_rank=" << cell(fit->alpha_rank) << " alpha=" << cell(fit->alpha)
                << " r_squared=" << cell(fit->r_squared) << "\n";
        out << "ln_rank" << d << "ln_value\n";
        for (const tailfit::PlotPoint& p : points)
            out << cell(p.ln_rank) << d << cell(p.ln_value) << "\n";
        text = out.str();
    }
    write_output(opt.io.output, text);
    if (!fit_error.empty()) {
        std::cerr << "warning: fitted line omitted: " << fit_error << "\n";
        return kExitPartialFailure;
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// sample / ranksize

struct SampleOptions {
    CommonOptions io;
    double m0 = 1.0;
    double alpha = 0.0;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> regions;
    int year = 2013;
    std::string kind = "income";
};

int run_sample(const SampleOptions& opt, bool exact) {
    const auto fmt = parse_precision(opt.io.precision);
    const tailfit::CsvOptions csv{parse_delimiter(opt.io.delimiter)};
    if (opt.n == 0) throw tailfit::parameter_error("--n must be at least 1");
    const tailfit::ParetoParams params{opt.m0, opt.alpha};
    tailfit::validate(params);

    std::vector<tailfit::Kind> kinds;
    if (opt.kind == "both")
        kinds = {tailfit::Kind::income, tailfit::Kind::wealth};
    else {
        const auto kind = tailfit::parse_kind(opt.kind);
        if (!kind)
            throw tailfit::parameter_error("--kind must be 'income', 'wealth' or 'both'");
        kinds = {*kind};
    }

    std::vector<tailfit::GroupKey> keys;
    const std::vector<std::string> regions =
        opt.regions.empty() ? std::vector<std::string>{"SYNTH"} : opt.regions;
    for (const std::string& region : regions)
        for (const tailfit::Kind kind : kinds) keys.push_back({region, opt.year, kind});
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

    std::uint64_t seed_state = opt.seed;
    std::vector<tailfit::RecordRow> rows;
    rows.reserve(keys.size() * opt.n);
    for (const tailfit::GroupKey& key : keys) {
        const std::uint64_t group_seed = tailfit::detail::splitmix64(seed_state);
        const tailfit::RankList list =
            exact ? tailfit::generate_exact_ranksize(params, opt.n, key)
                  : tailfit::generate_ranklist(params, opt.n, group_seed, key);
        for (std::size_t r = 1; r <= list.values.size(); ++r)
            rows.push_back({key.region, key.year, key.kind, r, list.values[r - 1]});
    }

    std::string text;
    if (opt.io.format == "json") {
        ordered_json arr = ordered_json::array();
        for (const tailfit::RecordRow& row : rows) {
            ordered_json obj;
            obj["region"] = row.region;
            obj["year"] = row.year;
            obj["kind"] = tailfit::to_string(row.kind);
            obj["rank"] = *row.rank;
            obj["value"] = row.value;
            arr.push_back(std::move(obj));
        }
        text = arr.dump(2) + "\n";
    } else {
        std::ostringstream out;
        tailfit::write_records(out, rows, fmt, csv);
        text = out.str();
    }
    write_output(opt.io.output, text);
    return kExitOk;
}

// ---------------------------------------------------------------------------

int run_guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const tailfit::csv_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const tailfit::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const tailfit::empty_selection_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoResult;
    } catch (const tailfit::degenerate_input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoResult;
    } catch (const tailfit::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tailfit - fit and validate power-law tails of top-k ranked data"};
    app.require_subcommand(1);

    FitOptions fit_opt;
    CLI::App* fit_cmd =
        app.add_subcommand("fit", "estimate tail exponents per (region, year, kind) group");
    add_io_options(*fit_cmd, fit_opt.io);
    fit_cmd->add_option("--method", fit_opt.method, "estimator")
        ->check(CLI::IsMember({"rank", "hill"}));
    fit_cmd->add_option("--bootstrap", fit_opt.bootstrap,
                        "number of bootstrap replicates for confidence intervals");
    fit_cmd->add_option("--level", fit_opt.level, "confidence level for --bootstrap");
    fit_cmd->add_option("--seed", fit_opt.seed, "bootstrap seed");

    SummarizeOptions sum_opt;
    CLI::App* sum_cmd = app.add_subcommand(
        "summarize", "per-year and pooled exponent statistics plus income/wealth pairing");
    add_io_options(*sum_cmd, sum_opt.io);
    sum_cmd->add_option("--aggregate-label", sum_opt.aggregate_label,
                        "region label of whole-country rows, excluded from region summaries");

    PlotOptions plot_opt;
    CLI::App* plot_cmd = app.add_subcommand(
        "plot-data", "log-log rank plot points and fitted line for one group");
    add_io_options(*plot_cmd, plot_opt.io);
    CLI::Option* plot_region = plot_cmd->add_option("--region", plot_opt.region, "group region");
    CLI::Option* plot_year = plot_cmd->add_option("--year", plot_opt.year, "group year");
    CLI::Option* plot_kind = plot_cmd->add_option("--kind", plot_opt.kind, "group kind");

    SampleOptions sample_opt;
    CLI::App* sample_cmd =
        app.add_subcommand("sample", "draw synthetic ranked groups from a power-law tail");
    add_output_options(*sample_cmd, sample_opt.io);
    sample_cmd->add_option("--m0", sample_opt.m0, "scale (lowest value)");
    sample_cmd->add_option("--alpha", sample_opt.alpha, "tail exponent")->required();
    sample_cmd->add_option("--n", sample_opt.n, "values per group")->required();
    sample_cmd->add_option("--seed", sample_opt.seed, "sampling seed");
    sample_cmd->add_option("--region", sample_opt.regions,
                           "group region label (repeat for several groups)");
    sample_cmd->add_option("--year", sample_opt.year, "group year");
    sample_cmd->add_option("--kind", sample_opt.kind, "income, wealth or both");

    SampleOptions ranksize_opt;
    CLI::App* ranksize_cmd = app.add_subcommand(
        "ranksize", "emit the exact noise-free rank-size sequence of a power-law tail");
    add_output_options(*ranksize_cmd, ranksize_opt.io);
    ranksize_cmd->add_option("--m0", ranksize_opt.m0, "scale (lowest value)");
    ranksize_cmd->add_option("--alpha", ranksize_opt.alpha, "tail exponent")->required();
    ranksize_cmd->add_option("--n", ranksize_opt.n, "values per group")->required();
    ranksize_cmd->add_option("--region", ranksize_opt.regions,
                             "group region label (repeat for several groups)");
    ranksize_cmd->add_option("--year", ranksize_opt.year, "group year");
    ranksize_cmd->add_option("--kind", ranksize_opt.kind, "income, wealth or both");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    plot_opt.has_region = plot_region->count() > 0;
    plot_opt.has_year = plot_year->count() > 0;
    plot_opt.has_kind = plot_kind->count() > 0;

    if (fit_cmd->parsed()) return run_guarded([&] { return run_fit(fit_opt); });
    if (sum_cmd->parsed()) return run_guarded([&] { return run_summarize(sum_opt); });
    if (plot_cmd->parsed()) return run_guarded([&] { return run_plotdata(plot_opt); });
    if (sample_cmd->parsed()) return run_guarded([&] { return run_sample(sample_opt, false); });
    if (ranksize_cmd->parsed()) return run_guarded([&] { return run_sample(ranksize_opt, true); });
    return kExitInputError;
}
