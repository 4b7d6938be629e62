#include "doctest.h"

#include "cyclemine/error.hpp"
#include "cyclemine/fraction.hpp"

using cyclemine::Error;
using cyclemine::ErrorCode;
using cyclemine::Fraction;

TEST_CASE("fractions normalize on construction") {
  CHECK(Fraction(22, 100) == Fraction(11, 50));
  CHECK(Fraction(22, 100).str() == "11/50");
  CHECK(Fraction(2, -4) == Fraction(-1, 2));
  CHECK(Fraction(-2, -4) == Fraction(1, 2));
  CHECK(Fraction(0, 7).str() == "0/1");
  CHECK(Fraction(5).den() == 1);
  CHECK_THROWS_AS(Fraction(1, 0), Error);
}

TEST_CASE("parsing accepts integers, decimals, percentages and ratios") {
  CHECK(Fraction::parse("2") == Fraction(2));
  CHECK(Fraction::parse("0.25") == Fraction(1, 4));
  CHECK(Fraction::parse("50%") == Fraction(1, 2));
  CHECK(Fraction::parse("1/2") == Fraction(1, 2));
  CHECK(Fraction::parse("2.5") == Fraction(5, 2));
  CHECK(Fraction::parse("-0.5") == Fraction(-1, 2));
  CHECK(Fraction::parse(" 3/9 ") == Fraction(1, 3));
  CHECK(Fraction::parse("0.22") == Fraction(22, 100));

  CHECK_THROWS_AS(Fraction::parse(""), Error);
  CHECK_THROWS_AS(Fraction::parse("abc"), Error);
  CHECK_THROWS_AS(Fraction::parse("1/0"), Error);
  CHECK_THROWS_AS(Fraction::parse("1.2.3"), Error);
  CHECK_THROWS_AS(Fraction::parse("%"), Error);
}

TEST_CASE("arithmetic stays exact") {
  CHECK(Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6));
  CHECK(Fraction(1, 2) - Fraction(1, 4) == Fraction(1, 4));
  CHECK(Fraction(2, 3) * Fraction(3, 4) == Fraction(1, 2));
  CHECK(Fraction(1, 2) / Fraction(3, 5) == Fraction(5, 6));
  CHECK(Fraction(3, 6) - Fraction(1, 4) == Fraction(1, 4));
  CHECK_THROWS_AS(Fraction(1, 2) / Fraction(0), Error);

  // (min_sup/(D+I) + min_sup)/(D+I) with min_sup=2, D+I=10.
  Fraction t(10);
  Fraction floor = (Fraction(2) / t + Fraction(2)) / t;
  CHECK(floor == Fraction(22, 100));
}

TEST_CASE("comparisons order by value") {
  CHECK(Fraction(1, 3) < Fraction(1, 2));
  CHECK(Fraction(2, 6) <= Fraction(1, 3));
  CHECK(Fraction(3, 4) > Fraction(2, 3));
  CHECK(Fraction(-1, 2) < Fraction(0));
  CHECK(Fraction(1, 3) != Fraction(1, 4));
}

TEST_CASE("rounding helpers") {
  CHECK(Fraction(7, 2).ceil_value() == 4);
  CHECK(Fraction(3).ceil_value() == 3);
  CHECK(Fraction(-1, 2).ceil_value() == 0);
  CHECK(Fraction(1, 3).ceil_scaled(6) == 2);
  CHECK(Fraction(1, 4).ceil_scaled(8) == 2);
  CHECK(Fraction(1, 4).ceil_scaled(10) == 3);

  // Halves round up.
  CHECK(Fraction(1, 4).round_scaled(10) == 3);
  CHECK(Fraction(1, 3).round_scaled(10) == 3);
  CHECK(Fraction(1, 2).round_scaled(5) == 3);
  CHECK(Fraction(0).round_scaled(100) == 0);
  CHECK_THROWS_AS(Fraction(-1, 2).round_scaled(10), Error);
}

TEST_CASE("overflow is an error, not a wrap") {
  Fraction tiny(1, 4000000000LL);
  CHECK_THROWS_AS(tiny * tiny, Error);
  try {
    tiny* tiny;
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }
}
