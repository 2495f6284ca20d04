#include "tailfit/pareto.hpp"

#include <cmath>
#include <vector>

#include <doctest.h>

#include "oracles.hpp"
#include "tailfit/errors.hpp"

using tailfit::ParetoParams;

TEST_CASE("the strongest power law sits at alpha = 3/2") {
    CHECK(tailfit::strongest_alpha == 1.5);
}

TEST_CASE("pdf matches the closed form on and off the support") {
    const ParetoParams p{1.0, 2.0};
    CHECK(tailfit::pdf(p, 1.0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(tailfit::pdf(p, 0.5) == 0.0);
    CHECK(tailfit::pdf(p, 2.0) == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS_AS(tailfit::pdf({0.0, 2.0}, 1.0), tailfit::parameter_error);
    CHECK_THROWS_AS(tailfit::pdf({1.0, -1.0}, 1.0), tailfit::parameter_error);
    CHECK_THROWS_AS(tailfit::ccdf({-3.0, 1.0}, 1.0), tailfit::parameter_error);
    CHECK_THROWS_AS(tailfit::sample({1.0, 0.0}, 5, 0), tailfit::parameter_error);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(tailfit::pdf({1.0, inf}, 1.0), tailfit::parameter_error);
}

TEST_CASE("ccdf values and total-function behaviour below m0") {
    CHECK(tailfit::ccdf({1.0, 1.0}, 2.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(tailfit::ccdf({5.0, 2.3}, 5.0) == 1.0);
    CHECK(tailfit::ccdf({1.0, 1.5}, 4.0) == doctest::Approx(0.125).epsilon(1e-14));
    CHECK(tailfit::ccdf({5.0, 2.3}, 1.0) == 1.0);
}

TEST_CASE("ccdf is nonincreasing and agrees with the mirrored form") {
    const ParetoParams p{2.0, 1.7};
    double prev = 1.0;
    for (double m = 0.5; m < 1e8; m *= 1.7) {
        const double c = tailfit::ccdf(p, m);
        CHECK(c <= prev + 1e-15);
        CHECK(c == doctest::Approx(oracles::pareto_ccdf(p.m0, p.alpha, m)).epsilon(1e-12));
        prev = c;
    }
}

TEST_CASE("quantile inverts the survival function") {
    CHECK(tailfit::quantile({1.0, 1.0}, 0.5) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(tailfit::quantile({1.0, 2.0}, 0.75) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(tailfit::quantile({1.0, 2.0}, 0.0) == 1.0);
    CHECK(tailfit::quantile({7.5, 0.3}, 0.0) == 7.5);
    CHECK(tailfit::median({1.0, 1.0}) == doctest::Approx(2.0).epsilon(1e-14));

    CHECK_THROWS_AS(tailfit::quantile({1.0, 1.0}, 1.0), tailfit::parameter_error);
    CHECK_THROWS_AS(tailfit::quantile({1.0, 1.0}, -0.1), tailfit::parameter_error);

    for (const ParetoParams p : {ParetoParams{1.0, 1.5}, ParetoParams{250.0, 2.3}}) {
        for (double prob : {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99}) {
            const double q = tailfit::quantile(p, prob);
            CHECK(std::abs(tailfit::ccdf(p, q) - (1.0 - prob)) < 1e-12);
        }
        // nondecreasing in p
        double prev = 0.0;
        for (double prob = 0.0; prob < 1.0; prob += 0.05) {
            const double q = tailfit::quantile(p, prob);
            CHECK(q >= prev);
            prev = q;
        }
    }
}

TEST_CASE("moments below alpha are finite, at or above alpha divergent") {
    CHECK(tailfit::moment({1.0, 2.0}, 1.0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK_FALSE(tailfit::moment({1.0, 2.0}, 2.0).has_value());
    CHECK_FALSE(tailfit::moment({1.0, 2.0}, 2.5).has_value());
    CHECK(tailfit::moment({1.0, 2.0}, 0.0) == 1.0);
    CHECK(tailfit::moment({42.0, 0.5}, 0.0) == 1.0);
    CHECK(tailfit::moment({2.0, 3.0}, 2.0) == doctest::Approx(12.0).epsilon(1e-14));
    CHECK_THROWS_AS(tailfit::moment({1.0, 2.0}, -1.0), tailfit::parameter_error);
}

TEST_CASE("moment matches the empirical power mean within 3 standard errors") {
    // only orders k <= alpha/2, where m^k has finite variance
    const struct {
        ParetoParams params;
        double k;
    } cases[] = {{{1.0, 3.0}, 1.0}, {{1.0, 3.0}, 1.5}, {{2.0, 1.5}, 0.5}};
    for (const auto& c : cases) {
        const auto draws = tailfit::sample(c.params, 1000000, 20240 + static_cast<int>(c.k * 10));
        double sum = 0.0, sum_sq = 0.0;
        for (double m : draws) {
            const double t = std::pow(m, c.k);
            sum += t;
            sum_sq += t * t;
        }
        const double n = static_cast<double>(draws.size());
        const double emp_mean = sum / n;
        const double emp_sd = std::sqrt(sum_sq / n - emp_mean * emp_mean);
        const double se = emp_sd / std::sqrt(n);
        const double expected = *tailfit::moment(c.params, c.k);
        CHECK(std::abs(emp_mean - expected) < 3.0 * se);
    }
}

TEST_CASE("sampling is deterministic, bounded below and n=0 gives nothing") {
    const ParetoParams p{3.0, 1.5};
    CHECK(tailfit::sample(p, 0, 1).empty());
    const auto a = tailfit::sample(p, 500, 99);
    const auto b = tailfit::sample(p, 500, 99);
    CHECK(a == b);
    for (double v : a) CHECK(v >= p.m0);
    CHECK(tailfit::sample(p, 500, 100) != a);
}

TEST_CASE("inverse survival transform pins u=1 to m0 exactly") {
    CHECK(tailfit::inverse_survival({3.25, 1.8}, 1.0) == 3.25);
    CHECK(tailfit::inverse_survival({1.0, 2.0}, 0.25) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK_THROWS_AS(tailfit::inverse_survival({1.0, 2.0}, 0.0), tailfit::parameter_error);
    CHECK_THROWS_AS(tailfit::inverse_survival({1.0, 2.0}, 1.5), tailfit::parameter_error);
}

TEST_CASE("KS statistic of 1e5 draws against the reference cdf is below 0.01") {
    const ParetoParams p{1.0, 1.5};
    const auto draws = tailfit::sample(p, 100000, 7);
    const double d = oracles::ks_statistic(
        draws, [&](double m) { return oracles::pareto_cdf(p.m0, p.alpha, m); });
    CHECK(d < 0.01);
}

TEST_CASE("pdf integrates to the mass below M") {
    for (const ParetoParams p : {ParetoParams{1.0, 1.5}, ParetoParams{1.0, 2.0},
                                 ParetoParams{5.0, 3.0}}) {
        const double upper = p.m0 * 1e6;
        const double integral = oracles::integrate_log(
            [&](double m) { return tailfit::pdf(p, m); }, p.m0, upper, 65536);
        CHECK(std::abs(integral - (1.0 - tailfit::ccdf(p, upper))) < 1e-8);
    }
}

TEST_CASE("pdf is the negative derivative of the ccdf") {
    const ParetoParams p{1.0, 1.5};
    for (double m = p.m0 * 1.5; m < p.m0 * 1e6; m *= 2.3) {
        const double h = m * 1e-6;
        const double deriv = -(tailfit::ccdf(p, m + h) - tailfit::ccdf(p, m - h)) / (2.0 * h);
        const double density = tailfit::pdf(p, m);
        CHECK(std::abs(deriv - density) / density < 1e-6);
    }
}
