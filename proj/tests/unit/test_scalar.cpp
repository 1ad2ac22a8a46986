#include "doctest.h"

#include "gha/errors.hpp"
#include "gha/scalar.hpp"

using gha::Rational;
using gha::parse_rational;

TEST_CASE("rational literals parse exactly") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("0.025") == Rational(1, 40));
  CHECK(parse_rational("007") == 7);
  CHECK(parse_rational("08/012") == Rational(2, 3));
  CHECK(parse_rational("-1.5e-2") == Rational(-3, 200));
  CHECK(parse_rational("2.5E1") == 25);
  CHECK(parse_rational(" 1/3 ") == Rational(1, 3));
  CHECK(parse_rational("0") == 0);
  CHECK_THROWS_AS(parse_rational("3/0"), gha::InvalidArgument);
  CHECK_THROWS_AS(parse_rational("abc"), gha::InvalidArgument);
  CHECK_THROWS_AS(parse_rational(""), gha::InvalidArgument);
  CHECK_THROWS_AS(parse_rational("1.2.3"), gha::InvalidArgument);
}

TEST_CASE("rational lists and formatting") {
  const auto v = gha::parse_rational_list("1, 1/2,0.75");
  REQUIRE(v.size() == 3);
  CHECK(v[2] == Rational(3, 4));
  CHECK(gha::to_string(Rational(-6, 4)) == "-3/2");
  CHECK(gha::to_string(Rational(5)) == "5");
  CHECK(gha::format_double(0.1) == "0.10000000000000001");
  CHECK(gha::is_perfect_square(gha::BigInt(144)));
  CHECK_FALSE(gha::is_perfect_square(gha::BigInt(145)));
}
