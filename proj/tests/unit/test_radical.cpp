#include <cmath>

#include "doctest.h"

#include "gha/radical.hpp"

using gha::Rational;
using gha::RadicalSum;

TEST_CASE("square roots of rationals") {
  CHECK(RadicalSum::sqrt(4) == RadicalSum(2));
  CHECK(RadicalSum::sqrt(Rational(9, 4)).as_rational() == Rational(3, 2));
  CHECK(RadicalSum::sqrt(0).is_zero());
  CHECK_FALSE(RadicalSum::sqrt(2).is_rational());
  CHECK(RadicalSum::sqrt(8) == RadicalSum(2) * RadicalSum::sqrt(2));
  CHECK(RadicalSum::sqrt(Rational(1, 2)).to_double() == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("products of radicals collapse when the radicand product is square") {
  const auto r2 = RadicalSum::sqrt(2), r3 = RadicalSum::sqrt(3), r6 = RadicalSum::sqrt(6);
  CHECK(r2 * r2 == RadicalSum(2));
  CHECK(r2 * r3 == r6);
  CHECK((r6 * r2 - RadicalSum(2) * r3).is_zero());
  CHECK((r2 + r3) * (r2 - r3) == RadicalSum(-1));
}

TEST_CASE("sums keep independent radicals apart") {
  const auto x = RadicalSum::sqrt(2) + RadicalSum::sqrt(3);
  CHECK_FALSE(x.is_zero());
  CHECK_FALSE(x.is_rational());
  CHECK(x.to_double() == doctest::Approx(std::sqrt(2.0) + std::sqrt(3.0)));
  CHECK((x - RadicalSum::sqrt(3) - RadicalSum::sqrt(2)).is_zero());
  CHECK((RadicalSum::sqrt(12) - RadicalSum(2) * RadicalSum::sqrt(3)).is_zero());
  CHECK(-(-x) == x);
}
