#include "sgdraw/rational.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

using sgdraw::parse_rational;
using sgdraw::Rational;

TEST(ParseRational, Integers) {
  EXPECT_EQ(parse_rational("0"), 0);
  EXPECT_EQ(parse_rational("-17"), -17);
  EXPECT_EQ(parse_rational("+4"), 4);
  EXPECT_EQ(parse_rational("123456789012345678901234567890"),
            Rational("123456789012345678901234567890"));
}

TEST(ParseRational, Fractions) {
  EXPECT_EQ(parse_rational("1/2"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(parse_rational("0/5"), 0);
}

TEST(ParseRational, DecimalsAreExact) {
  EXPECT_EQ(parse_rational("0.1"), Rational(1, 10));
  EXPECT_EQ(parse_rational("-1.25"), Rational(-5, 4));
  EXPECT_EQ(parse_rational(".5"), Rational(1, 2));
  EXPECT_EQ(parse_rational("3."), 3);
  EXPECT_EQ(parse_rational("3e-2"), Rational(3, 100));
  EXPECT_EQ(parse_rational("2.5E3"), 2500);
}

TEST(ParseRational, Rejects) {
  for (const char* bad : {"", "abc", "1/0", "1/-2", "1.2.3", "--1", "1e", ".", "1/2/3", " 1"}) {
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
  }
}

TEST(ToString, LowestTerms) {
  EXPECT_EQ(sgdraw::to_string(sgdraw::make_rational(4, 6)), "2/3");
  EXPECT_EQ(sgdraw::to_string(sgdraw::make_rational(-8, 4)), "-2");
}

TEST(MakeRational, Canonical) {
  EXPECT_EQ(sgdraw::make_rational(4, 6), Rational(2, 3));
  EXPECT_EQ(sgdraw::make_rational(3, -3), -1);
  EXPECT_THROW(sgdraw::make_rational(1, 0), std::invalid_argument);
}

TEST(RoundDyadic, NearestMultiple) {
  EXPECT_EQ(sgdraw::round_dyadic(Rational(1, 3), 2), Rational(1, 4));
  EXPECT_EQ(sgdraw::round_dyadic(Rational(3, 8), 2), Rational(1, 2));   // tie, away from 0
  EXPECT_EQ(sgdraw::round_dyadic(Rational(-3, 8), 2), Rational(-1, 2));
  EXPECT_EQ(sgdraw::round_dyadic(Rational(7), 0), 7);
  EXPECT_EQ(sgdraw::round_dyadic(Rational(5, 2), 0), 3);
  EXPECT_THROW(sgdraw::round_dyadic(Rational(1), -1), std::invalid_argument);
}
