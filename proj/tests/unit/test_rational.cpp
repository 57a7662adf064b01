#include <gtest/gtest.h>

#include <random>

#include "deckclass/rational.hpp"

using namespace deckclass;

TEST(Rational, ParsesAndCanonicalizes) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-4/6"), Rational(-2, 3));
  EXPECT_EQ(to_string(parse_rational("10/4")), "5/2");
  EXPECT_EQ(to_string(parse_rational("-8/4")), "-2");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Rational, ExactRoots) {
  EXPECT_EQ(exact_root(Rational(8, 27), 3), Rational(2, 3));
  EXPECT_EQ(exact_root(Rational(-32), 5), Rational(-2));
  EXPECT_EQ(exact_root(Rational(1, 16), 4), Rational(1, 2));
  EXPECT_FALSE(exact_root(Rational(2), 2).has_value());
  EXPECT_FALSE(exact_root(Rational(-4), 2).has_value());
}

TEST(Rational, PowAndSign) {
  EXPECT_EQ(pow(Rational(-1, 2), 3), Rational(-1, 8));
  EXPECT_EQ(pow(Rational(5), 0), Rational(1));
  EXPECT_EQ(pow(BigInt(3), 4), BigInt(81));
  EXPECT_EQ(sign(Rational(-1, 9)), -1);
  EXPECT_EQ(sign(Rational(0)), 0);
}

TEST(Rational, RootMultiplierDividesPower) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(1, 200000);
  for (int trial = 0; trial < 200; ++trial) {
    BigInt n(d(rng));
    for (unsigned deg : {1u, 3u, 5u, 11u}) {
      BigInt r = root_multiplier(n, deg);
      EXPECT_GT(r, 0);
      EXPECT_EQ(BigInt(pow(r, deg) % n), 0) << n << " " << deg;
      EXPECT_LE(r, n);
    }
  }
  EXPECT_EQ(root_multiplier(BigInt(8), 3), BigInt(2));
  EXPECT_EQ(root_multiplier(BigInt(1), 7), BigInt(1));
}
