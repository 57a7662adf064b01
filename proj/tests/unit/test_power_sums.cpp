#include <gtest/gtest.h>

#include "deckclass/power_sums.hpp"

using namespace deckclass;

namespace {

WeightedMultiset of(std::initializer_list<std::pair<Rational, long>> items) {
  WeightedMultiset ms;
  for (const auto& [v, m] : items) ms.add(v, BigInt(m));
  return ms;
}

void expect_same(const WeightedMultiset& a, const WeightedMultiset& b) {
  ASSERT_EQ(a.items().size(), b.items().size());
  for (std::size_t i = 0; i < a.items().size(); ++i) {
    EXPECT_EQ(a.items()[i].value, b.items()[i].value);
    EXPECT_EQ(a.items()[i].mult, b.items()[i].mult);
  }
}

}  // namespace

TEST(PowerSums, PowerSumExamples) {
  auto ms = of({{1, 32}, {-2, 1}});
  EXPECT_EQ(power_sum(ms, 3), Rational(24));
  EXPECT_EQ(power_sum(ms, 5), Rational(0));
  EXPECT_EQ(power_sum(WeightedMultiset{}, 7), Rational(0));
  EXPECT_EQ(ms.total(), BigInt(33));
}

TEST(PowerSums, MultisetMergesEqualValues) {
  auto ms = of({{Rational(1, 2), 3}, {-1, 1}, {Rational(1, 2), 2}});
  ASSERT_EQ(ms.items().size(), 2u);
  EXPECT_EQ(ms.items()[0].value, Rational(-1));
  EXPECT_EQ(ms.items()[1].mult, BigInt(5));
  WeightedMultiset empty;
  empty.add(3, 0);
  EXPECT_TRUE(empty.empty());
}

TEST(PowerSums, PowersZeroExamples) {
  expect_same(powers_zero(3, 3), of({{1, 1}}));
  expect_same(powers_zero(3, 5), of({{-2, 1}, {1, 32}}));
  auto f = powers_zero(5, 5);
  EXPECT_EQ(power_sum(f, 3), 0);
  EXPECT_GT(power_sum(f, 5), 0);
  EXPECT_THROW(powers_zero(4, 5), std::invalid_argument);
  EXPECT_THROW(powers_zero(7, 5), std::invalid_argument);
}

TEST(PowerSums, PowersZeroAllPairs) {
  for (int k = 3; k <= 11; k += 2)
    for (int k0 = 3; k0 <= k; k0 += 2) {
      auto ms = powers_zero(k0, k);
      for (int e = 3; e <= k; e += 2) {
        if (e == k0) EXPECT_GT(power_sum(ms, e), 0);
        else EXPECT_EQ(power_sum(ms, e), 0) << k0 << " " << k << " " << e;
      }
    }
}

TEST(PowersSmall, Examples) {
  expect_same(powers_small(3, 3, Rational(1, 6)), of({{Rational(1, 8), 512}}));
  auto ms = powers_small(3, 5, Rational(1, 1000));
  EXPECT_EQ(power_sum(ms, 3), 1);
  EXPECT_EQ(power_sum(ms, 5), 0);
  EXPECT_LE(power_sum(ms, 6), Rational(1, 1000));
  // A loose bound needs no scaling.
  expect_same(powers_small(3, 3, Rational(1)), of({{1, 1}}));
}

TEST(PrescribePowers, Examples) {
  EXPECT_TRUE(prescribe_powers(7, {}, Rational(1, 10)).empty());
  EXPECT_TRUE(prescribe_powers(7, {{3, 0}, {5, 0}}, Rational(1, 10)).empty());
  expect_same(prescribe_powers(3, {{3, 1}}, Rational(1, 6)), powers_small(3, 3, Rational(1, 6)));
  auto ms = prescribe_powers(5, {{3, 1}, {5, -1}}, Rational(1, 100));
  EXPECT_EQ(power_sum(ms, 3), 1);
  EXPECT_EQ(power_sum(ms, 5), -1);
  EXPECT_LE(power_sum(ms, 6), Rational(1, 100));
}

TEST(PrescribePowers, IrrationalRootsStayExact) {
  // Targets that are not perfect powers of a rational.
  std::map<int, Rational> t = {{3, Rational(2)}, {5, Rational(-7, 3)}, {9, Rational(5, 11)}};
  for (const Rational& delta : {Rational(1, 3), Rational(1, 1000), Rational(1, 1 << 20)}) {
    auto ms = prescribe_powers(9, t, delta);
    for (int e = 3; e <= 9; e += 2) EXPECT_EQ(power_sum(ms, e), t.count(e) ? t[e] : Rational(0));
    EXPECT_LE(power_sum(ms, 10), delta);
  }
  EXPECT_THROW(prescribe_powers(5, {{4, 1}}, Rational(1)), std::invalid_argument);
  EXPECT_THROW(prescribe_powers(5, {{3, 1}}, Rational(0)), std::invalid_argument);
}
