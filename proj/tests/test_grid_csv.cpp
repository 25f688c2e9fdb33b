#include <cmath>
#include <sstream>
#include <string>

#include "doctest.h"
#include "pcf/csv.hpp"
#include "pcf/errors.hpp"
#include "pcf/grid.hpp"
#include "pcf/harness.hpp"

using namespace pcf;

TEST_CASE("parse_axis") {
    CHECK(parse_axis("1") == std::vector<double>{1.0});
    CHECK(parse_axis("0.51,2, 50") == std::vector<double>{0.51, 2.0, 50.0});
    CHECK(parse_axis("1:2:0.5") == std::vector<double>{1.0, 1.5, 2.0});
    CHECK(parse_axis("0:1:1,5") == std::vector<double>{0.0, 1.0, 5.0});

    CHECK_THROWS_AS(parse_axis(""), DomainError);
    CHECK_THROWS_AS(parse_axis("a"), DomainError);
    CHECK_THROWS_AS(parse_axis("1:0:0.1"), DomainError);
    CHECK_THROWS_AS(parse_axis("0:1:0"), DomainError);
    CHECK_THROWS_AS(parse_axis("0:1:-1"), DomainError);
    CHECK_THROWS_AS(parse_axis("0:1"), DomainError);
    CHECK_THROWS_AS(parse_axis("inf"), DomainError);
    CHECK_THROWS_AS(parse_axis("1,,2"), DomainError);
}

TEST_CASE("progression includes stop and canonicalises values") {
    const auto xs = progression(-30.0, 30.0, 0.1);
    REQUIRE(xs.size() == 601);
    CHECK(xs.front() == -30.0);
    CHECK(xs.back() == 30.0);
    CHECK(xs[300] == 0.0);
    CHECK(xs[301] == 0.1);
    CHECK(xs[350] == 5.0);

    CHECK(progression(0.0, 1.0, 0.3).size() == 4);  // 0, .3, .6, .9
    CHECK(progression(2.0, 2.0, 1.0) == std::vector<double>{2.0});
}

TEST_CASE("default grid") {
    const Grid g = default_grid();
    CHECK(g.n_values.size() == 10);
    CHECK(g.x_values.size() == 601);
    CHECK_NOTHROW(g.validate());
    Grid empty;
    CHECK_THROWS_AS(empty.validate(), DomainError);
}

TEST_CASE("csv round trip") {
    VerificationReport rep;
    rep.theorem = TheoremId::thm1;
    rep.records.push_back({1.0, 0.0, "c0<c1", 0.0, 0.0, std::nan(""), Status::skip});
    rep.records.push_back({2.0, -0.1, "F<g[-3/2;1/2]", 1.0 / 3.0, 2.0 / 3.0, 1.0 / 3.0, Status::pass});
    rep.records.push_back({2.0, 0.1, "c1<1", 1.0, 1.0, 0.0, Status::inconclusive});
    rep.records.push_back({5.0, 7.0, "c0<c1", 2.0, 1.0, -1.0, Status::fail});
    rep.summarize();

    std::stringstream ss;
    write_csv(ss, std::span<const VerificationReport>(&rep, 1));
    std::string header;
    std::getline(std::stringstream(ss.str()), header);
    CHECK(header == kCsvHeader);

    const auto rows = read_csv(ss);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].theorem_id == "thm1");
    CHECK(std::isnan(rows[0].margin));
    CHECK(rows[1].lhs == 1.0 / 3.0);  // 17 digits round-trip exactly
    CHECK(rows[1].x == -0.1);
    CHECK(rows[1].quantity == "F<g[-3/2;1/2]");
    CHECK(rows[3].status == Status::fail);

    const VerificationReport back = summarize_rows(rows);
    CHECK(back.violations == rep.violations);
    CHECK(back.inconclusive == rep.inconclusive);
    CHECK(back.skipped == rep.skipped);
    CHECK(back.passed == rep.passed);
    CHECK(back.min_margin == rep.min_margin);
    CHECK(back.argmin_n == 5.0);
    CHECK(back.argmin_x == 7.0);
}

TEST_CASE("read_csv rejects malformed input") {
    std::stringstream none("");
    CHECK_THROWS_AS(read_csv(none), DomainError);
    std::stringstream wrong("a,b,c\n");
    CHECK_THROWS_AS(read_csv(wrong), DomainError);
    std::stringstream shortrow(std::string(kCsvHeader) + "\neso,1,0,q,1,2\n");
    CHECK_THROWS_AS(read_csv(shortrow), DomainError);
    std::stringstream badstatus(std::string(kCsvHeader) + "\neso,1,0,q,1,2,1,maybe\n");
    CHECK_THROWS_AS(read_csv(badstatus), DomainError);
    std::stringstream badnum(std::string(kCsvHeader) + "\neso,one,0,q,1,2,1,pass\n");
    CHECK_THROWS_AS(read_csv(badnum), DomainError);
}
