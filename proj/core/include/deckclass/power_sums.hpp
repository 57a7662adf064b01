#pragma once

#include <map>
#include <vector>

#include "deckclass/rational.hpp"

namespace deckclass {

struct WeightedValue {
  Rational value;
  BigInt mult;
};

// Distinct values with positive multiplicities, sorted by value.
class WeightedMultiset {
 public:
  WeightedMultiset() = default;

  void add(const Rational& value, const BigInt& mult);
  const std::vector<WeightedValue>& items() const { return items_; }
  bool empty() const { return items_.empty(); }
  BigInt total() const;

 private:
  std::vector<WeightedValue> items_;
};

Rational power_sum(const WeightedMultiset& ms, unsigned e);

// Integer solution of sum_j z_j j^(2i+1) = [2i+1 == k0], i.e. a multiset of
// ±j whose odd power sums of order 3..k vanish except the k0-th, which is
// positive.
WeightedMultiset powers_zero(int k0, int k);
// Integer vector behind powers_zero, indexed by j = 1..(k-1)/2.
std::vector<BigInt> powers_zero_vector(int k0, int k);

// Odd power sums of order 3..k vanish except the k0-th, which equals 1, and
// the (k+1)-st is at most delta.
WeightedMultiset powers_small(int k0, int k, const Rational& delta);

// Odd power sums of order 3..k equal targets (absent keys mean 0) and the
// (k+1)-st is at most delta.
WeightedMultiset prescribe_powers(int k, const std::map<int, Rational>& targets, const Rational& delta);

}  // namespace deckclass
