#include <doctest.h>

#include "dyngame/errors.hpp"
#include "dyngame/rational.hpp"

using namespace dyngame;

TEST_CASE("parse accepts fractions, integers and decimals") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("+3") == Rational(3));
  CHECK(parse_rational("-7/14") == Rational(-1, 2));
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("-2.50") == Rational(-5, 2));
  CHECK(parse_rational("0.1") == Rational(1, 10));
  CHECK(parse_rational("007") == Rational(7));
}

TEST_CASE("parse rejects malformed input") {
  for (const char* bad : {"", " 1", "1 ", "1/0", "1.2.3", "1e5", "--1", "1/-2", ".5", "1.", "a"})
    CHECK_THROWS_AS(parse_rational(bad), ParseError);
}

TEST_CASE("format is canonical") {
  CHECK(format_rational(Rational(1, 2)) == "1/2");
  CHECK(format_rational(parse_rational("2/4")) == "1/2");
  CHECK(format_rational(Rational(-3)) == "-3");
  CHECK(format_rational(Rational(0)) == "0");
  CHECK(format_rational(parse_rational("0.500")) == "1/2");
}
