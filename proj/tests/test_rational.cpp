#include <doctest.h>

#include "noderel/rational.hpp"

using namespace noderel;

TEST_CASE("parse_rational reads decimals exactly") {
    CHECK(parse_rational("1e-6") == Rational(1, 1000000));
    CHECK(parse_rational("0.001") == Rational(1, 1000));
    CHECK(parse_rational("-2/6") == Rational(-1, 3));
    CHECK(parse_rational(" 3 ") == Rational(3));
    CHECK(parse_rational("0.1") == Rational(1, 10));
    CHECK(parse_rational("2.5E2") == Rational(250));
    CHECK(parse_rational(".5") == Rational(1, 2));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
    CHECK_THROWS(parse_rational("1.2.3"));
    CHECK_THROWS(parse_rational(""));
}

TEST_CASE("to_decimal") {
    CHECK(to_decimal(Rational(15, 32)) == "0.46875");
    CHECK(to_decimal(Rational(0)) == "0");
    CHECK(to_decimal(Rational(1)) == "1");
    CHECK(to_decimal(Rational(1, 2)) == "0.5");
    CHECK(to_decimal(Rational(1, 3)) == "0.333333333333");
    CHECK(to_decimal(Rational(2, 3)) == "0.666666666667");
    CHECK(to_decimal(Rational(-2, 3), 3) == "-0.667");
    CHECK(to_decimal(Rational(123456), 3) == "123000");
    CHECK(to_decimal(Rational(1, 1000)) == "0.001");
    CHECK(to_decimal(Rational(9999999, 10000000), 3) == "1");
    CHECK(to_decimal(Rational(Integer(1), Integer("100000000000000"))) == "0.00000000000001");
}
