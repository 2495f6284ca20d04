#include "tailfit/aggregate.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <vector>

#include <doctest.h>

#include "oracles.hpp"
#include "tailfit/csv.hpp"
#include "tailfit/errors.hpp"
#include "tailfit/norway_reference.hpp"

using tailfit::ExponentTable;
using tailfit::GroupKey;
using tailfit::Kind;

namespace {

ExponentTable table_of(std::initializer_list<std::pair<GroupKey, double>> rows) {
    ExponentTable t;
    for (const auto& [key, alpha] : rows) t.set(key, {alpha, std::nullopt});
    return t;
}

}  // namespace

TEST_CASE("reference table has the full grid") {
    const auto& table = tailfit::norway_reference_exponents();
    CHECK(table.size() == 20 * 4 * 2);
    const auto* akershus = table.find({"Akershus", 2010, Kind::income});
    REQUIRE(akershus != nullptr);
    CHECK(akershus->alpha == 2.45);
    const auto* norway = table.find({"NORWAY", 2013, Kind::wealth});
    REQUIRE(norway != nullptr);
    CHECK(norway->alpha == 1.55);
}

TEST_CASE("region summaries match the published columns") {
    const auto& table = tailfit::norway_reference_exponents();

    const auto income_2010 = summarize_regions(table, 2010, Kind::income);
    CHECK(income_2010.n == 19);
    CHECK(std::abs(income_2010.mean - 2.23) <= 0.02);
    CHECK(std::abs(income_2010.dispersion - 0.37) <= 0.02);

    const auto wealth_2013 = summarize_regions(table, 2013, Kind::wealth);
    CHECK(wealth_2013.n == 19);
    CHECK(std::abs(wealth_2013.mean - 1.59) <= 0.02);
    CHECK(std::abs(wealth_2013.dispersion - 0.32) <= 0.02);
}

TEST_CASE("single-row selections have zero dispersion") {
    const auto table = table_of({{{"Oslo", 2010, Kind::income}, 1.53}});
    const auto stats = summarize_regions(table, 2010, Kind::income);
    CHECK(stats.n == 1);
    CHECK(stats.mean == 1.53);
    CHECK(stats.dispersion == 0.0);
}

TEST_CASE("empty selections raise") {
    const auto table = table_of({{{"Oslo", 2010, Kind::income}, 1.53}});
    CHECK_THROWS_AS(summarize_regions(table, 2011, Kind::income), tailfit::empty_selection_error);
    CHECK_THROWS_AS(summarize_regions(table, 2010, Kind::wealth), tailfit::empty_selection_error);
    CHECK_THROWS_AS(four_year_summary(table, Kind::wealth), tailfit::empty_selection_error);
    CHECK_THROWS_AS(compare_income_wealth(table), tailfit::empty_selection_error);
}

TEST_CASE("pooled summaries match the published four-year exponents") {
    const auto& table = tailfit::norway_reference_exponents();

    const auto wealth = four_year_summary(table, Kind::wealth);
    CHECK(wealth.n == 76);
    CHECK(std::abs(wealth.mean - 1.5) < 0.05);

    // the reference arithmetic gives ~2.20 against the published 2.3 headline
    const auto income = four_year_summary(table, Kind::income);
    CHECK(income.n == 76);
    CHECK(std::abs(income.mean - 2.3) < 0.15);
    CHECK(std::abs(income.mean - 2.20) < 0.01);
}

TEST_CASE("pooling the same value across four years gives zero dispersion") {
    ExponentTable table;
    for (int year : {2010, 2011, 2012, 2013})
        table.set({"Oslo", year, Kind::income}, {1.8, std::nullopt});
    const auto stats = four_year_summary(table, Kind::income);
    CHECK(stats.n == 4);
    CHECK(stats.mean == doctest::Approx(1.8).epsilon(1e-14));
    CHECK(stats.dispersion == 0.0);
}

TEST_CASE("income/wealth pairing flags strict inequality only") {
    const auto& table = tailfit::norway_reference_exponents();
    const auto pairs = compare_income_wealth(table);
    CHECK(pairs.size() == 76);

    bool seen_akershus_2010 = false, seen_hedmark_2012 = false;
    for (const auto& pair : pairs) {
        if (pair.region == "Akershus" && pair.year == 2010) {
            seen_akershus_2010 = true;
            CHECK(pair.income_alpha == 2.45);
            CHECK(pair.wealth_alpha == 1.14);
            CHECK(pair.wealth_lower);
        }
        if (pair.region == "Hedmark" && pair.year == 2012) {
            seen_hedmark_2012 = true;
            CHECK(pair.income_alpha == 1.14);
            CHECK(pair.wealth_alpha == 1.66);
            CHECK_FALSE(pair.wealth_lower);
        }
    }
    CHECK(seen_akershus_2010);
    CHECK(seen_hedmark_2012);

    // tie counts as not lower
    const auto tie_table = table_of({{{"X", 2010, Kind::income}, 1.5},
                                     {{"X", 2010, Kind::wealth}, 1.5}});
    CHECK_FALSE(compare_income_wealth(tie_table)[0].wealth_lower);
}

TEST_CASE("exceptions are a small minority, confirmed by exhaustive scan") {
    const auto& table = tailfit::norway_reference_exponents();

    // independent scan straight over the stored rows
    std::vector<std::pair<std::string, int>> scanned;
    for (const auto& [key, row] : table.rows()) {
        if (key.kind != Kind::income || key.region == "NORWAY") continue;
        const auto* wealth = table.find({key.region, key.year, Kind::wealth});
        REQUIRE(wealth != nullptr);
        if (wealth->alpha >= row.alpha) scanned.emplace_back(key.region, key.year);
    }

    std::vector<std::pair<std::string, int>> reported;
    for (const auto& pair : compare_income_wealth(table))
        if (!pair.wealth_lower) reported.emplace_back(pair.region, pair.year);

    CHECK(scanned == reported);
    CHECK(reported.size() < 8);
}

TEST_CASE("income exponents fluctuate over time more than wealth ones") {
    const auto& table = tailfit::norway_reference_exponents();
    const double income = temporal_fluctuation(table, Kind::income);
    const double wealth = temporal_fluctuation(table, Kind::wealth);
    CHECK(income > wealth);
    CHECK(wealth > 0.0);
}

TEST_CASE("temporal fluctuation edge cases") {
    ExponentTable constant;
    for (int year : {2010, 2011, 2012})
        constant.set({"Oslo", year, Kind::income}, {2.0, std::nullopt});
    CHECK(temporal_fluctuation(constant, Kind::income) == 0.0);

    const auto single_year = table_of({{{"Oslo", 2010, Kind::income}, 2.0},
                                       {{"Bergen", 2010, Kind::income}, 2.2}});
    CHECK_THROWS_AS(temporal_fluctuation(single_year, Kind::income),
                    tailfit::empty_selection_error);
}

TEST_CASE("summaries are independent of insertion order") {
    const auto& reference = tailfit::norway_reference_exponents();
    std::vector<std::pair<GroupKey, tailfit::ExponentRow>> rows(reference.rows().begin(),
                                                                reference.rows().end());
    std::shuffle(rows.begin(), rows.end(), std::mt19937_64(19));
    ExponentTable shuffled;
    for (const auto& [key, row] : rows) shuffled.set(key, row);

    const auto a = summarize_regions(reference, 2011, Kind::wealth);
    const auto b = summarize_regions(shuffled, 2011, Kind::wealth);
    CHECK(a.mean == b.mean);
    CHECK(a.dispersion == b.dispersion);
    CHECK(a.n == b.n);
}

TEST_CASE("dispersion satisfies the population-variance identity") {
    const auto& table = tailfit::norway_reference_exponents();
    for (int year : tailfit::norway_reference_years) {
        for (Kind kind : {Kind::income, Kind::wealth}) {
            const auto stats = summarize_regions(table, year, kind);
            std::vector<double> alphas;
            for (const auto& [key, row] : table.rows())
                if (key.year == year && key.kind == kind && key.region != "NORWAY")
                    alphas.push_back(row.alpha);
            double ss = 0.0;
            for (double a : alphas) ss += (a - stats.mean) * (a - stats.mean);
            CHECK(std::abs(stats.dispersion * stats.dispersion * static_cast<double>(stats.n) -
                           ss) < 1e-12);
            CHECK(stats.dispersion == doctest::Approx(oracles::population_sd(alphas))
                                          .epsilon(1e-12));
        }
    }
}

TEST_CASE("the aggregate row never enters region summaries") {
    ExponentTable without;
    for (const auto& [key, row] : tailfit::norway_reference_exponents().rows())
        if (key.region != "NORWAY") without.set(key, row);

    const auto& with = tailfit::norway_reference_exponents();
    for (int year : tailfit::norway_reference_years) {
        for (Kind kind : {Kind::income, Kind::wealth}) {
            const auto a = summarize_regions(with, year, kind);
            const auto b = summarize_regions(without, year, kind);
            CHECK(a.mean == b.mean);
            CHECK(a.dispersion == b.dispersion);
            CHECK(a.n == b.n);
        }
    }
    CHECK(four_year_summary(with, Kind::income).mean ==
          four_year_summary(without, Kind::income).mean);
    CHECK(compare_income_wealth(with).size() == compare_income_wealth(without).size());
    CHECK(temporal_fluctuation(with, Kind::wealth) ==
          temporal_fluctuation(without, Kind::wealth));
}

TEST_CASE("a custom aggregate label is honored") {
    const auto table = table_of({{{"TOTAL", 2010, Kind::income}, 9.0},
                                 {{"Oslo", 2010, Kind::income}, 2.0},
                                 {{"Bergen", 2010, Kind::income}, 3.0}});
    const auto stats = summarize_regions(table, 2010, Kind::income, "TOTAL");
    CHECK(stats.n == 2);
    CHECK(stats.mean == doctest::Approx(2.5).epsilon(1e-14));
}

TEST_CASE("reference table round-trips through CSV unchanged") {
    const auto& table = tailfit::norway_reference_exponents();
    std::ostringstream out;
    tailfit::write_exponent_table(out, table);
    std::istringstream in(out.str());
    const auto parsed = tailfit::read_exponent_table(in);

    REQUIRE(parsed.size() == table.size());
    for (const auto& [key, row] : table.rows()) {
        const auto* found = parsed.find(key);
        REQUIRE(found != nullptr);
        CHECK(found->alpha == row.alpha);
    }
}

TEST_CASE("the shipped CSV resource equals the embedded table") {
    std::ifstream in(std::string(TAILFIT_DATA_DIR) + "/norway_top100_exponents_2010_2013.csv",
                     std::ios::binary);
    REQUIRE(in.is_open());
    const auto parsed = tailfit::read_exponent_table(in);
    const auto& table = tailfit::norway_reference_exponents();
    REQUIRE(parsed.size() == table.size());
    for (const auto& [key, row] : table.rows()) {
        const auto* found = parsed.find(key);
        REQUIRE(found != nullptr);
        CHECK(found->alpha == row.alpha);
    }
}
