#include "tvt/rational.hpp"

#include <doctest.h>

using namespace tvt;

TEST_CASE("rationals parse, reduce and round-trip") {
  CHECK(rational_to_string(parse_rational("6/4")) == "3/2");
  CHECK(rational_to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(rational_to_string(parse_rational("5")) == "5/1");
  CHECK(rational_to_string(parse_rational("0/7")) == "0/1");
  CHECK(parse_rational("1/3") + parse_rational("1/6") == parse_rational("1/2"));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("denominators stay positive and reduced") {
  const Rational x = make_rational(3, -6);
  CHECK(numerator(x) == -1);
  CHECK(denominator(x) == 2);
}

TEST_CASE("decimal rendering is exact integer arithmetic") {
  CHECK(rational_to_decimal(make_rational(1, 3), 6) == "0.333333");
  CHECK(rational_to_decimal(make_rational(2, 3), 6) == "0.666667");
  CHECK(rational_to_decimal(make_rational(-1, 2), 3) == "-0.500");
  CHECK(rational_to_decimal(make_rational(5, 8), 12) == "0.625000000000");
  CHECK(rational_to_decimal(Rational(7), 0) == "7");
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(12) == 479001600);
}
