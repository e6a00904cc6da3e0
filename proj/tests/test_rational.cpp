#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "jf/rational.hpp"

#include <stdexcept>

using jf::Integer;
using jf::Rational;

TEST_CASE("make_rational canonicalizes sign and common factors") {
  CHECK(jf::make_rational(2, -4) == jf::make_rational(-1, 2));
  CHECK(jf::make_rational(0, 7) == Rational(0));
  CHECK(jf::make_rational(6, 3) == Rational(2));
  CHECK(jf::make_rational(Integer(10), Integer(-15)) == jf::make_rational(-2, 3));
}

TEST_CASE("rational string round-trip") {
  CHECK(jf::rational_to_string(jf::make_rational(5)) == "5/1");
  CHECK(jf::rational_to_string(jf::make_rational(-1, 3)) == "-1/3");
  CHECK(jf::rational_from_string("7/2") == jf::make_rational(7, 2));
  CHECK(jf::rational_from_string("-4") == Rational(-4));
  CHECK(jf::rational_from_string("6/4") == jf::make_rational(3, 2));
  CHECK_THROWS_AS(jf::rational_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(jf::rational_from_string("x"), std::invalid_argument);
  CHECK_THROWS_AS(jf::rational_from_string(""), std::invalid_argument);
}

TEST_CASE("is_integer") {
  CHECK(jf::is_integer(Rational(4)));
  CHECK_FALSE(jf::is_integer(jf::make_rational(1, 2)));
  CHECK(jf::is_integer(jf::make_rational(8, 4)));
}

TEST_CASE("factorial and binomial") {
  CHECK(jf::factorial(0) == 1);
  CHECK(jf::factorial(5) == 120);
  CHECK(jf::factorial(20) == Integer("2432902008176640000"));
  CHECK(jf::binomial(10, 3) == 120);
  CHECK(jf::binomial(10, 0) == 1);
  CHECK(jf::binomial(3, 5) == 0);
  CHECK(jf::binomial(52, 26) == Integer("495918532948104"));
}

TEST_CASE("pow_rational handles negative exponents") {
  CHECK(jf::pow_rational(jf::make_rational(2, 3), 3) == jf::make_rational(8, 27));
  CHECK(jf::pow_rational(jf::make_rational(2, 3), -2) == jf::make_rational(9, 4));
  CHECK(jf::pow_rational(Rational(7), 0) == Rational(1));
  CHECK_THROWS(jf::pow_rational(Rational(0), -1));
}
