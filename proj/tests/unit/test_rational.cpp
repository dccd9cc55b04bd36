#include "dtq/rational.hpp"

#include <doctest.h>

using namespace dtq;

TEST_CASE("parse and print rationals")
{
    CHECK(parse_rational("3/6") == frac(1, 2));
    CHECK(parse_rational("-4/2") == Rational(-2));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(to_string(frac(-2, 4)) == "-1/2");
    CHECK(to_string(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("frac is canonical")
{
    const Rational a = frac(6, -4);
    CHECK(a.get_num() == -3);
    CHECK(a.get_den() == 2);
    CHECK(is_integer(frac(8, 4)));
    CHECK_FALSE(is_integer(frac(1, 3)));
}

TEST_CASE("integer helpers")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(12, 6) == 924);
    CHECK(binomial(3, 5) == 0);
    CHECK(pow(frac(2, 3), 3) == frac(8, 27));
    CHECK(moebius(1) == 1);
    CHECK(moebius(2) == -1);
    CHECK(moebius(4) == 0);
    CHECK(moebius(6) == 1);
    CHECK(moebius(30) == -1);
}
