#include <gtest/gtest.h>

#include "lgmk/rational.hpp"

using namespace lgmk;

TEST(Rational, ReducedWithPositiveDenominator) {
  Rational r = make_rational(6, -8);
  EXPECT_EQ(r.get_num(), -3);
  EXPECT_EQ(r.get_den(), 4);
  EXPECT_EQ(to_string(r), "-3/4");
  EXPECT_EQ(to_string(make_rational(10, 5)), "2");
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
}

TEST(Rational, Parse) {
  EXPECT_EQ(parse_rational("12/5"), make_rational(12, 5));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational(" 4/6 "), make_rational(2, 3));
  EXPECT_FALSE(parse_rational("1/0"));
  EXPECT_FALSE(parse_rational("0.5"));
  EXPECT_FALSE(parse_rational(""));
  EXPECT_FALSE(parse_rational("1/"));
}

TEST(Rational, FracAndInteger) {
  EXPECT_EQ(frac(make_rational(7, 3)), make_rational(1, 3));
  EXPECT_EQ(frac(make_rational(-1, 3)), make_rational(2, 3));
  EXPECT_EQ(frac(Rational(5)), 0);
  EXPECT_TRUE(is_integer(Rational(-4)));
  EXPECT_FALSE(is_integer(make_rational(1, 2)));
}

TEST(Rational, ExactSqrt) {
  EXPECT_EQ(exact_sqrt(make_rational(4, 9)), make_rational(2, 3));
  EXPECT_EQ(exact_sqrt(Rational(0)), Rational(0));
  EXPECT_FALSE(exact_sqrt(Rational(2)));
  EXPECT_FALSE(exact_sqrt(Rational(-4)));
  EXPECT_FALSE(exact_sqrt(make_rational(4, 3)));
}

TEST(Rational, GcdLcm) {
  EXPECT_EQ(gcd(BigInt(12), BigInt(18)), 6);
  EXPECT_EQ(lcm(BigInt(4), BigInt(6)), 12);
}
