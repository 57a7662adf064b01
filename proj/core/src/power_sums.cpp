#include "deckclass/power_sums.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace deckclass {

void WeightedMultiset::add(const Rational& value, const BigInt& mult) {
  if (mult < 0) throw std::invalid_argument("negative multiplicity");
  if (mult == 0) return;
  auto it = std::lower_bound(items_.begin(), items_.end(), value,
                             [](const WeightedValue& a, const Rational& v) { return a.value < v; });
  if (it != items_.end() && it->value == value)
    it->mult += mult;
  else
    items_.insert(it, {value, mult});
}

BigInt WeightedMultiset::total() const {
  BigInt t = 0;
  for (const auto& w : items_) t += w.mult;
  return t;
}

Rational power_sum(const WeightedMultiset& ms, unsigned e) {
  Rational s = 0;
  for (const auto& w : ms.items()) s += Rational(w.mult) * pow(w.value, e);
  return s;
}

namespace {

void check_orders(int k0, int k) {
  if (k0 < 3 || k0 % 2 == 0 || k % 2 == 0 || k0 > k)
    throw std::invalid_argument("power orders must be odd with 3 <= k0 <= k");
}

// Bareiss elimination on an integer system; returns x scaled to integers with
// positive content-free entries' gcd 1 and sign fixed so the k0-th sum is > 0.
std::vector<BigInt> solve_integer(std::vector<std::vector<BigInt>> a, std::vector<BigInt> b) {
  const std::size_t n = a.size();
  for (std::size_t r = 0; r < n; ++r) a[r].push_back(b[r]);
  BigInt prev = 1;
  for (std::size_t p = 0; p < n; ++p) {
    std::size_t piv = p;
    while (piv < n && a[piv][p] == 0) ++piv;
    if (piv == n) throw std::logic_error("singular power matrix");
    std::swap(a[p], a[piv]);
    for (std::size_t r = p + 1; r < n; ++r) {
      for (std::size_t c = p + 1; c <= n; ++c) a[r][c] = (a[p][p] * a[r][c] - a[r][p] * a[p][c]) / prev;
      a[r][p] = 0;
    }
    prev = a[p][p];
  }
  // Back substitution in rationals, then clear denominators.
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational s = Rational(a[i][n]);
    for (std::size_t c = i + 1; c < n; ++c) s -= Rational(a[i][c]) * x[c];
    x[i] = s / Rational(a[i][i]);
  }
  BigInt l = 1;
  for (const auto& v : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  std::vector<BigInt> z(n);
  BigInt g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Rational s = x[i] * Rational(l);
    z[i] = s.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
  }
  if (g > 1)
    for (auto& v : z) v /= g;
  return z;
}

}  // namespace

std::vector<BigInt> powers_zero_vector(int k0, int k) {
  check_orders(k0, k);
  const int n = (k - 1) / 2;
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  std::vector<BigInt> b(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = pow(BigInt(j + 1), static_cast<unsigned>(2 * i + 3));
    if (2 * i + 3 == k0) b[i] = 1;
  }
  return solve_integer(a, b);
}

WeightedMultiset powers_zero(int k0, int k) {
  auto z = powers_zero_vector(k0, k);
  WeightedMultiset ms;
  for (std::size_t j = 0; j < z.size(); ++j) {
    Rational v(static_cast<long>(j + 1));
    if (z[j] > 0) ms.add(v, z[j]);
    if (z[j] < 0) ms.add(-v, -z[j]);
  }
  return ms;
}

namespace {

// powers_zero(k0, k) rescaled so its k0-th sum is |s| (sign carried by the
// values) and its (k+1)-st sum is at most budget. Values become ±ω/N with
// N = r·2^n, where r^k0·|s| denominators clear; multiplicities |s|N^k0/Ω.
WeightedMultiset scaled_block(int k0, int k, const Rational& s, const Rational& budget) {
  WeightedMultiset base = powers_zero(k0, k);
  Rational omega = power_sum(base, k0);
  Rational big = power_sum(base, k + 1);
  Rational mag = abs(s);
  // Need (N^k0 · |s| / Ω) integral: N^k0 divisible by Ω·den / gcd(Ω·den, num).
  BigInt need = omega.get_num() * mag.get_den();
  BigInt g;
  mpz_gcd(g.get_mpz_t(), need.get_mpz_t(), mag.get_num_mpz_t());
  need /= g;
  BigInt r = root_multiplier(need, static_cast<unsigned>(k0));
  BigInt n_scale = r;
  auto bound = [&](const BigInt& nn) -> Rational {
    return mag * big / (omega * Rational(pow(nn, static_cast<unsigned>(k + 1 - k0))));
  };
  while (bound(n_scale) > budget) n_scale *= 2;
  Rational factor = mag * Rational(pow(n_scale, static_cast<unsigned>(k0))) / omega;
  if (factor.get_den() != 1) throw std::logic_error("non-integral multiplicity in power block");
  WeightedMultiset out;
  int sg = sgn(s);
  for (const auto& w : base.items())
    out.add(Rational(sg) * w.value / Rational(n_scale), w.mult * factor.get_num());
  return out;
}

}  // namespace

WeightedMultiset powers_small(int k0, int k, const Rational& delta) {
  check_orders(k0, k);
  if (delta <= 0) throw std::invalid_argument("delta must be positive");
  return scaled_block(k0, k, Rational(1), delta);
}

WeightedMultiset prescribe_powers(int k, const std::map<int, Rational>& targets, const Rational& delta) {
  if (k < 3 || k % 2 == 0) throw std::invalid_argument("k must be odd and at least 3");
  if (delta <= 0) throw std::invalid_argument("delta must be positive");
  int nonzero = 0;
  for (const auto& [l, s] : targets) {
    if (l < 3 || l > k || l % 2 == 0) throw std::invalid_argument("target orders must be odd in [3, k]");
    if (s != 0) ++nonzero;
  }
  WeightedMultiset out;
  if (nonzero == 0) return out;
  Rational budget = delta / Rational(nonzero);
  for (const auto& [l, s] : targets) {
    if (s == 0) continue;
    WeightedMultiset block = scaled_block(l, k, s, budget);
    for (const auto& w : block.items()) out.add(w.value, w.mult);
  }
  return out;
}

}  // namespace deckclass
