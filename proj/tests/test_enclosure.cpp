#include <cmath>
#include <vector>

#include "doctest.h"
#include "pcf/bounds.hpp"
#include "pcf/enclosure.hpp"
#include "pcf/errors.hpp"
#include "pcf/oracle.hpp"

using namespace pcf;

namespace {

constexpr long double kH1At0 = 0.95597759497224999073L;
constexpr long double kF1At0 = 1.3708397431333908761L;
constexpr long double kF2At0 = 1.215799786236931466L;

double rel_width(const Enclosure& e) { return e.width() / e.midpoint(); }

}  // namespace

TEST_CASE("seed interval") {
    const Enclosure s = seed_interval(1.0, 0.0);
    CHECK(s.lo == doctest::Approx(0.816496580927726).epsilon(1e-14));
    CHECK(s.hi == doctest::Approx(1.414213562373095).epsilon(1e-14));
    CHECK(s.contains(kH1At0));
    CHECK_THROWS_AS(seed_interval(0.5, 1.0), DomainError);
    CHECK_THROWS_AS(seed_interval(-0.5, 1.0), DomainError);
    CHECK(near_order_boundary(0.5 + 1e-9));
    CHECK_FALSE(near_order_boundary(0.51));
}

TEST_CASE("one backward step maps seed(n+1) into seed(n) for x >= 0") {
    for (double n : {0.6, 1.0, 2.0, 7.5, 40.0}) {
        for (double x : {0.0, 0.3, 2.0, 15.0}) {
            CAPTURE(n);
            CAPTURE(x);
            const Enclosure img = backward_step(seed_interval(n + 1.0, x), n, x);
            const Enclosure s = seed_interval(n, x);
            // image.lo equals seed.lo in exact arithmetic; allow a few ulps.
            CHECK(img.lo >= s.lo * (1.0 - 8e-16));
            CHECK(img.hi <= s.hi);
        }
    }
}

TEST_CASE("backward_step") {
    SUBCASE("degenerate interval stays tight") {
        const Enclosure e = backward_step({0.5, 0.5}, 1.0, 1.0);
        const double exact = 1.0 / (1.0 + 1.5 * 0.5);
        CHECK(e.contains(exact));
        // three rounded operations, each widened one ulp per side
        CHECK(e.width() <= 8 * (std::nextafter(exact, 2.0) - exact));
    }
    SUBCASE("positivity") {
        CHECK_THROWS_AS(backward_step({0.0, 1.0}, 1.0, 1.0), PositivityLost);
        CHECK_THROWS_AS(backward_step({-0.1, 1.0}, 1.0, 1.0), PositivityLost);
        CHECK_THROWS_AS(backward_step({0.5, 1.0}, 1.0, -0.75), PositivityLost);
    }
}

TEST_CASE("forward_step") {
    const double h1 = 0.57920477263848011613;
    CHECK(forward_step(h1, 2.0, 1.0) == doctest::Approx(0.48433674034907159056).epsilon(1e-8));
    // forward inverts backward on point values
    const double h3 = 0.3;
    const Enclosure h2 = backward_step({h3, h3}, 2.0, 1.0);
    CHECK(forward_step(h2.midpoint(), 3.0, 1.0) == doctest::Approx(h3).epsilon(1e-14));
    CHECK_THROWS_AS(forward_step(1.0, 0.5, 0.0), DomainError);
    CHECK_THROWS_AS(forward_step(0.0, 2.0, 0.0), DivisionByZero);
}

TEST_CASE("h_enclosure") {
    SUBCASE("depth 0 is the seed") {
        const Enclosure e = h_enclosure({1.0, 0.0}, {0, 0.0});
        const Enclosure s = seed_interval(1.0, 0.0);
        CHECK(e.lo == s.lo);
        CHECK(e.hi == s.hi);
    }
    SUBCASE("x = 0 contains the Gamma value") {
        CHECK(h_enclosure({1.0, 0.0}).contains(kH1At0));
    }
    SUBCASE("x = 0: no contraction, relative width equals the seed at order n + depth") {
        // h_m h_{m+1} = 1/(m+1/2) at x = 0, so each step preserves relative width.
        for (double n : {1.0, 2.0, 5.0}) {
            for (int depth : {5, 40}) {
                CAPTURE(n);
                CAPTURE(depth);
                const double got = rel_width(h_enclosure({n, 0.0}, {depth, 0.0}));
                const double seed = rel_width(seed_interval(n + depth, 0.0));
                CHECK(got == doctest::Approx(seed).epsilon(1e-6));
            }
        }
    }
    SUBCASE("x > 0 contracts") {
        CHECK(rel_width(h_enclosure({1.0, 5.0})) <= 1e-13);
        CHECK(rel_width(h_enclosure({10.0, 20.0})) <= 1e-13);
    }
    SUBCASE("min_width stops at the first sufficient depth") {
        RefinementConfig cfg{40, 1e-6};
        const Enclosure e = h_enclosure({1.0, 5.0}, cfg);
        CHECK(e.width() <= 1e-6);
        CHECK(e.width() > 1e-13);
    }
    CHECK_THROWS_AS(h_enclosure({0.5, 0.0}), DomainError);
    CHECK_THROWS_AS(h_enclosure({-0.5, 1.0}), DomainError);
    CHECK_THROWS_AS(h_enclosure({1.0, 0.0}, {-1, 0.0}), DomainError);
}

TEST_CASE("containment and nesting over a grid") {
    const std::vector<double> orders = {0.6, 1.0, 2.0, 5.0, 10.0};
    for (double n : orders) {
        for (int i = 0; i <= 80; ++i) {
            const double x = -20.0 + 0.5 * i;
            const long double ref = oracle_h(n, x);
            Enclosure prev = seed_interval(n, x);
            for (int depth : {0, 5, 20, 40}) {
                CAPTURE(n);
                CAPTURE(x);
                CAPTURE(depth);
                const Enclosure e = h_enclosure({n, x}, {depth, 0.0});
                CHECK(e.contains(ref));
                CHECK(e.subset_of(prev));
                prev = e;
            }
        }
    }
}

TEST_CASE("f_enclosure") {
    const Enclosure f1 = f_enclosure({1.0, 0.0});
    CHECK(f1.contains(kF1At0));
    CHECK(f_enclosure({2.0, 0.0}).contains(kF2At0));
    CHECK(f_enclosure({1.0, 0.0}, {0, 0.0}).width() > f1.width());
    CHECK(f1.lo >= 1.0);

    for (double n : {0.75, 5.0, 10.0}) {
        for (double x : {-20.0, -3.0, 2.5, 12.0}) {
            CAPTURE(n);
            CAPTURE(x);
            const RatioEnclosures r = ratio_enclosures({n, x});
            CHECK(r.f.contains(oracle_f(n, x)));
            CHECK(r.h.contains(oracle_h(n, x)));
            CHECK(r.h_next.contains(oracle_h(n + 1.0, x)));
        }
    }
    CHECK_THROWS_AS(f_enclosure({-0.5, 1.0}), DomainError);
}
