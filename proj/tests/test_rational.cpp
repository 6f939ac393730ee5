#include <catch2/catch_amalgamated.hpp>

#include "girth5/rational.hpp"

using girth5::ExtRational;
using girth5::Rational;

TEST_CASE("construction reduces and normalizes sign") {
  CHECK(Rational(72, 4113) == Rational(8, 457));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(-4, -8) == Rational(1, 2));
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
  CHECK(-Rational(5, 7) == Rational(-5, 7));
}

TEST_CASE("comparisons use cross multiplication") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(7, 7) >= Rational(1));
  CHECK(Rational(2184, 4113) > Rational(540, 4113));
}

TEST_CASE("string form omits unit denominators") {
  CHECK(Rational(5).str() == "5");
  CHECK(Rational(4, 4113).str() == "4/4113");
  CHECK(Rational(-1, 2).str() == "-1/2");
}

TEST_CASE("overflow and zero denominators are reported") {
  CHECK_THROWS_AS(Rational(1, 0), std::overflow_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::overflow_error);
  Rational big(INT64_MAX, 1);
  CHECK_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("extended rationals carry an explicit minus-infinity tag") {
  CHECK(ExtRational::neg_inf().str() == "-inf");
  CHECK(ExtRational::of(Rational(1, 2)).str() == "1/2");
  CHECK(ExtRational::neg_inf() == ExtRational::neg_inf());
  CHECK(!(ExtRational::neg_inf() == ExtRational::of(Rational(0))));
}
