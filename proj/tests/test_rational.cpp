#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dicut/errors.hpp"
#include "dicut/rational.hpp"

using namespace dicut;

TEST_CASE("parse_rat accepts fractions, integers, decimals") {
    CHECK(parse_rat("3/8") == frac(3, 8));
    CHECK(parse_rat("6/16") == frac(3, 8));
    CHECK(parse_rat("-2/4") == frac(-1, 2));
    CHECK(parse_rat("7") == Rat(7));
    CHECK(parse_rat("0.125") == frac(1, 8));
    CHECK(parse_rat("-3.5") == frac(-7, 2));
    CHECK(parse_rat("0.005") == frac(1, 200));

    CHECK_THROWS_AS(parse_rat(""), parse_error);
    CHECK_THROWS_AS(parse_rat("1/0"), parse_error);
    CHECK_THROWS_AS(parse_rat("a/b"), parse_error);
    CHECK_THROWS_AS(parse_rat("1.2/3"), parse_error);
    CHECK_THROWS_AS(parse_rat("1."), parse_error);
}

TEST_CASE("rat_str canonicalizes and round-trips") {
    CHECK(rat_str(frac(6, 16)) == "3/8");
    CHECK(rat_str(Rat(5)) == "5");
    CHECK(rat_str(frac(-10, 4)) == "-5/2");
    for (const char* s : {"3/8", "-5/2", "0", "533/1088"}) CHECK(rat_str(parse_rat(s)) == s);
}

TEST_CASE("decimal rendering") {
    CHECK(rat_decimal(frac(1, 4)) == "0.25");
    CHECK(rat_decimal(frac(533, 1088)).substr(0, 6) == "0.4898");
}

TEST_CASE("fingerprints are stable and text-sensitive") {
    CHECK(fingerprint_hex("abc") == fingerprint_hex("abc"));
    CHECK(fingerprint_hex("abc") != fingerprint_hex("abd"));
    CHECK(fingerprint_hex("x").size() == 16);
}
