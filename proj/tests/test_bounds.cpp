#include <cmath>
#include <random>

#include "doctest.h"
#include "pcf/bounds.hpp"
#include "pcf/enclosure.hpp"
#include "pcf/errors.hpp"

using namespace pcf;

TEST_CASE("g family") {
    CHECK(g({0.3, 0.3}, {2.0, -4.0}) == 1.0);
    CHECK(g({-7.0, -7.0}, {0.6, 11.0}) == 1.0);
    CHECK(g(kConjectureG, {1.0, 0.0}) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
    CHECK(g(kChainUpperG, {1.0, 0.0}) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));

    // radicand 4(n - 3/2) + x^2 < 0
    CHECK_THROWS_AS(g(kChainLowerG, {1.0, 0.5}), DomainError);
    // denominator x + sqrt(x^2) = 0 for x < 0 when beta = n
    CHECK_THROWS_AS(g({-0.5, 1.0}, {1.0, -2.0}), DomainError);
}

TEST_CASE("g on the negative half-line matches the direct formula") {
    // Direct evaluation in long double as the reference.
    auto direct = [](GSpec s, double n, double x) {
        const long double xl = x;
        const long double num = xl + std::sqrt(4.0L * (n - s.alpha) + xl * xl);
        const long double den = xl + std::sqrt(4.0L * (n - s.beta) + xl * xl);
        return static_cast<double>(num / den);
    };
    for (double n : {0.6, 2.0, 9.0})
        for (double x : {-5.0, -1.0, -0.1})
            CHECK(g(kConjectureG, {n, x}) == doctest::Approx(direct(kConjectureG, n, x)).epsilon(1e-13));
}

TEST_CASE("g[-3/2,1/2] decreases strictly in x") {
    for (double n : {0.51, 0.75, 1.0, 2.0, 5.0, 50.0}) {
        double prev = g(kChainUpperG, {n, -30.0});
        for (int i = 1; i <= 600; ++i) {
            const double x = -30.0 + 0.1 * i;
            const double v = g(kChainUpperG, {n, x});
            CAPTURE(n);
            CAPTURE(x);
            CHECK(v - prev < 0.0);
            prev = v;
        }
    }
}

TEST_CASE("g[-1/2,1/2] limits at large |x|") {
    for (double n : {0.6, 1.0, 3.0, 10.0}) {
        CAPTURE(n);
        CHECK(std::fabs(g(kConjectureG, {n, 1e3}) - 1.0) <= 1e-4);
        CHECK(std::fabs(g(kConjectureG, {n, -1e3}) - (n + 0.5) / (n - 0.5)) <= 1e-4);
    }
}

TEST_CASE("universal bounds") {
    CHECK(universal_bounds(1.0).lower == 1.0);
    CHECK(universal_bounds(1.0).upper == 3.0);
    CHECK(universal_bounds(1.5).upper == 2.0);
    CHECK(universal_bounds(1e12).upper == doctest::Approx(1.0).epsilon(1e-11));
    CHECK_THROWS_AS(universal_bounds(0.5), DomainError);
}

TEST_CASE("F chain") {
    SUBCASE("n = 2, x = 0") {
        const double f2 = 1.215799786236931466;  // Gamma closed form
        const FChain c = f_chain({2.0, 0.0}, f2);
        REQUIRE(c.values[0]);
        CHECK(*c.values[0] == doctest::Approx(0.2 * std::sqrt(5.0)).epsilon(1e-15));
        CHECK(*c.values[1] == doctest::Approx(0.6 * f2).epsilon(1e-15));
        CHECK(*c.values[2] == 1.0);
        CHECK(*c.values[3] == f2);
        CHECK(*c.values[4] == doctest::Approx(std::sqrt(14.0 / 6.0)).epsilon(1e-15));
        CHECK(c.strictly_ascending());
    }
    SUBCASE("n = 1: first entry absent") {
        const FChain c = f_chain({1.0, 0.0}, OracleConfig{});
        CHECK_FALSE(c.values[0]);
        CHECK(*c.values[3] == doctest::Approx(1.3708397431333908761).epsilon(1e-13));
        CHECK(*c.values[4] == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
        CHECK(c.strictly_ascending());
    }
    SUBCASE("prefactor vanishes as n -> 3/2") {
        const FChain c = f_chain({1.5 + 1e-9, 0.7}, 1.5);
        REQUIRE(c.values[0]);
        CHECK(*c.values[0] >= 0.0);
        CHECK(*c.values[0] < 1e-8);
    }
    SUBCASE("ordering violations are detected") {
        FChain c = f_chain({1.0, 0.0}, 0.9);  // F below 1
        CHECK_FALSE(c.strictly_ascending());
    }
    CHECK_THROWS_AS(f_chain({0.5, 0.0}, 1.1), DomainError);
}

TEST_CASE("h bounds for all x") {
    const HBounds a = h_bounds_all_x({1.0, 0.0});
    CHECK(a.lower == doctest::Approx(2.0 / std::sqrt(6.0)).epsilon(1e-15));
    CHECK(a.upper == doctest::Approx(2.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(a.lower <= 2.0 / std::sqrt(6.0));
    CHECK(a.upper >= 2.0 / std::sqrt(2.0));
    CHECK_FALSE(a.lower_shifted);

    const HBounds b = h_bounds_all_x({2.0, 0.0});
    CHECK(b.lower == doctest::Approx(2.0 / std::sqrt(10.0)).epsilon(1e-15));
    CHECK(b.upper == doctest::Approx(2.0 / std::sqrt(6.0)).epsilon(1e-15));
    REQUIRE(b.lower_shifted);
    CHECK(*b.lower_shifted == doctest::Approx(0.5 / 1.5 * 2.0 / std::sqrt(2.0)).epsilon(1e-15));

    const HBounds c = h_bounds_all_x({2.0, -1.0});
    REQUIRE(c.lower_shifted);
    CHECK(*c.lower_shifted == doctest::Approx(1.0 / 3.0 * 2.0 / (-1.0 + std::sqrt(3.0))).epsilon(1e-14));

    // n = 5, x = -3: both endpoints positive
    const HBounds d = h_bounds_all_x({5.0, -3.0});
    CHECK(d.lower == doctest::Approx(2.0 / (-3.0 + std::sqrt(31.0))).epsilon(1e-14));
    CHECK(d.upper == doctest::Approx(2.0 / (-3.0 + std::sqrt(27.0))).epsilon(1e-14));

    CHECK_THROWS_AS(h_bounds_all_x({0.5, 1.0}), DomainError);
}

TEST_CASE("h bounds are outward-rounded versions of the long double formula") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> order(0.51, 60.0);
    std::uniform_real_distribution<double> arg(-40.0, 40.0);
    auto exact = [](double n, double x, double k) {
        const long double xl = x;
        const long double c = 4.0L * n + k;
        const long double s = std::sqrt(xl * xl + c);
        return xl >= 0 ? 2.0L / (xl + s) : 2.0L * (s - xl) / c;
    };
    for (int i = 0; i < 2000; ++i) {
        const double n = order(rng);
        const double x = arg(rng);
        const HBounds b = h_bounds_all_x({n, x});
        CAPTURE(n);
        CAPTURE(x);
        CHECK(b.lower <= exact(n, x, 2.0));
        CHECK(b.upper >= exact(n, x, -2.0));
        CHECK(b.lower >= exact(n, x, 2.0) * (1 - 1e-14L));
        CHECK(b.upper <= exact(n, x, -2.0) * (1 + 1e-14L));
    }
}

TEST_CASE("seed interval equals the h bounds bit for bit") {
    for (double n : {0.51, 0.6, 1.0, 2.0, 7.25, 50.0}) {
        for (double x : {-30.0, -2.5, 0.0, 0.1, 19.0}) {
            const HBounds b = h_bounds_all_x({n, x});
            const Enclosure s = seed_interval(n, x);
            CHECK(s.lo == b.lower);
            CHECK(s.hi == b.upper);
        }
    }
}

TEST_CASE("half-line bound") {
    CHECK(half_line_bound(1.0) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
    CHECK(half_line_bound(2.5) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    // equals g[-3/2,1/2] at x = 0
    for (double n : {0.6, 1.0, 4.0}) CHECK(half_line_bound(n) == doctest::Approx(g(kChainUpperG, {n, 0.0})));
    CHECK_THROWS_AS(half_line_bound(0.4), DomainError);
}

TEST_CASE("check is raw and strict") {
    const CheckResult a = check(1.0, 3.0);
    CHECK(a.holds);
    CHECK(a.margin == 2.0);
    const CheckResult b = check(3.0, 3.0);
    CHECK_FALSE(b.holds);
    CHECK(b.margin == 0.0);
    CHECK(check(std::sqrt(3.0), std::sqrt(5.0)).holds);
    CHECK_FALSE(check(1.0, 1.0 - 1e-16).holds);
}
