#include <doctest.h>

#include <stdexcept>

#include "demyanov/errors.hpp"
#include "demyanov/rational.hpp"

using demyanov::Integer;
using demyanov::ParseError;
using demyanov::Rational;

TEST_CASE("rational literals parse exactly and reduce") {
  CHECK(Rational::parse("1/2") == Rational(1, 2));
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-0") == Rational(0));
  CHECK(Rational::parse("0/5").to_string() == "0");
  CHECK(Rational::parse("10/4").to_string() == "5/2");
  CHECK(Rational::parse("-10/4").denominator() == 2);

  const Rational big = Rational::parse("123456789012345678901234567890/3");
  CHECK(big.to_string() == "41152263004115226300411522630");
}

TEST_CASE("malformed rational literals are rejected") {
  for (const char* bad : {"", "-", "1/", "/2", "1/0", "1.5", "1e3", "+1", "--1", "1/-2", " 1", "a"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), ParseError);
  }
  CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), std::invalid_argument);
}

TEST_CASE("rational arithmetic and ordering") {
  const Rational a(1, 3);
  const Rational b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == b);
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK(b < a);
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(-5, 7).sign() == -1);
  CHECK_THROWS_AS(a / Rational(0), demyanov::InvariantViolation);
}
