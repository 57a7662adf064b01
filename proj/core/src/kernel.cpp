#include "deckclass/kernel.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace deckclass {

StepFunction::StepFunction() : breaks_{Rational(0), Rational(1)}, values_{Rational(0)} {}

StepFunction::StepFunction(std::vector<Rational> breakpoints, std::vector<Rational> values) {
  if (breakpoints.size() != values.size() + 1 || values.empty())
    throw std::invalid_argument("step function needs one more breakpoint than values");
  if (breakpoints.front() != 0 || breakpoints.back() != 1)
    throw std::invalid_argument("step function breakpoints must span [0,1]");
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    if (!(breakpoints[i] < breakpoints[i + 1])) throw std::invalid_argument("breakpoints must increase strictly");
  // Merge equal neighbours so equal functions compare equal.
  breaks_.push_back(breakpoints.front());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values_.empty() && values_.back() == values[i]) {
      breaks_.back() = breakpoints[i + 1];
    } else {
      values_.push_back(values[i]);
      breaks_.push_back(breakpoints[i + 1]);
    }
  }
}

StepFunction StepFunction::constant(const Rational& c) { return StepFunction({Rational(0), Rational(1)}, {c}); }

StepFunction StepFunction::uniform(std::vector<Rational> cell_values) {
  const std::size_t n = cell_values.size();
  std::vector<Rational> b(n + 1);
  for (std::size_t i = 0; i <= n; ++i) b[i] = Rational(static_cast<long>(i), static_cast<long>(n));
  for (auto& x : b) x.canonicalize();
  return StepFunction(std::move(b), std::move(cell_values));
}

Rational StepFunction::operator()(const Rational& x) const {
  if (x < 0 || x >= 1) throw std::out_of_range("step functions live on [0,1)");
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
  return values_[static_cast<std::size_t>(it - breaks_.begin()) - 1];
}

Rational StepFunction::integral() const {
  Rational s = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) s += values_[i] * (breaks_[i + 1] - breaks_[i]);
  return s;
}

Rational StepFunction::integral_over(const Rational& a, const Rational& b) const {
  Rational s = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const Rational& lo = a < breaks_[i] ? breaks_[i] : a;
    const Rational& hi = b < breaks_[i + 1] ? b : breaks_[i + 1];
    if (lo < hi) s += values_[i] * (hi - lo);
  }
  return s;
}

bool StepFunction::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& v) { return v == 0; });
}

std::vector<Rational> StepFunction::on_grid(int n) const {
  std::vector<Rational> out(n);
  for (const auto& b : breaks_) {
    Rational t = b * n;
    if (t.get_den() != 1) throw std::invalid_argument("breakpoint off the requested grid");
  }
  for (int i = 0; i < n; ++i) out[i] = (*this)(ratio(i, n));
  return out;
}

namespace {

template <class Op>
StepFunction combine(const StepFunction& f, const StepFunction& g, Op op) {
  std::vector<Rational> b;
  std::merge(f.breakpoints().begin(), f.breakpoints().end(), g.breakpoints().begin(), g.breakpoints().end(),
             std::back_inserter(b));
  b.erase(std::unique(b.begin(), b.end()), b.end());
  std::vector<Rational> v(b.size() - 1);
  for (std::size_t i = 0; i + 1 < b.size(); ++i) v[i] = op(f(b[i]), g(b[i]));
  return StepFunction(std::move(b), std::move(v));
}

}  // namespace

StepFunction StepFunction::operator*(const StepFunction& o) const {
  return combine(*this, o, [](const Rational& a, const Rational& b) { return Rational(a * b); });
}

StepFunction StepFunction::operator+(const StepFunction& o) const {
  return combine(*this, o, [](const Rational& a, const Rational& b) { return Rational(a + b); });
}

StepFunction StepFunction::scaled(const Rational& c) const {
  std::vector<Rational> v = values_;
  for (auto& x : v) x *= c;
  return StepFunction(breaks_, std::move(v));
}

Rational glue(const StepFunction& f, const StepFunction& g) { return (f * g).integral(); }

StepKernel::StepKernel(std::vector<std::vector<Rational>> matrix) : m_(std::move(matrix)) {
  const std::size_t n = m_.size();
  if (n == 0) throw std::invalid_argument("kernel grid must be non-empty");
  for (const auto& row : m_)
    if (row.size() != n) throw std::invalid_argument("kernel grid must be square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m_[i][j] != m_[j][i]) throw std::invalid_argument("kernel grid must be symmetric");
}

StepKernel StepKernel::constant(const Rational& c) { return StepKernel({{c}}); }

std::vector<std::vector<BigInt>> StepKernel::scaled_integer(BigInt& denominator) const {
  denominator = 1;
  for (const auto& row : m_)
    for (const auto& v : row) mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(), v.get_den_mpz_t());
  std::vector<std::vector<BigInt>> a(m_.size(), std::vector<BigInt>(m_.size()));
  for (std::size_t i = 0; i < m_.size(); ++i)
    for (std::size_t j = 0; j < m_.size(); ++j) a[i][j] = m_[i][j].get_num() * (denominator / m_[i][j].get_den());
  return a;
}

StepKernel StepKernel::affine(const Rational& shift, const Rational& scale) const {
  auto m = m_;
  for (auto& row : m)
    for (auto& v : row) v = shift + scale * v;
  return StepKernel(std::move(m));
}

Rational StepKernel::max_abs() const {
  Rational best = 0;
  for (const auto& row : m_)
    for (const auto& v : row)
      if (abs(v) > best) best = abs(v);
  return best;
}

bool StepKernel::is_zero() const { return max_abs() == 0; }

bool is_orthonormal(const RankOneSum& u) {
  for (std::size_t s = 0; s < u.terms.size(); ++s)
    for (std::size_t t = s; t < u.terms.size(); ++t)
      if (glue(u.terms[s].f, u.terms[t].f) != (s == t ? 1 : 0)) return false;
  return true;
}

namespace {

struct Factor {
  std::vector<int> vars;  // sorted
  std::vector<BigInt> data;
};

// Sum over all cell assignments of the product of factors, by greedy
// min-scope variable elimination.
BigInt contract(std::vector<Factor> factors, int vertices, int n) {
  std::vector<bool> alive(vertices, false);
  for (const auto& f : factors)
    for (int v : f.vars) alive[v] = true;
  BigInt scalar = 1;
  for (int v = 0; v < vertices; ++v)
    if (!alive[v]) scalar *= n;

  for (;;) {
    int best = -1;
    std::size_t best_scope = 0, best_touch = 0;
    for (int v = 0; v < vertices; ++v) {
      if (!alive[v]) continue;
      std::vector<int> scope;
      std::size_t touch = 0;
      for (const auto& f : factors) {
        if (!std::binary_search(f.vars.begin(), f.vars.end(), v)) continue;
        ++touch;
        scope.insert(scope.end(), f.vars.begin(), f.vars.end());
      }
      std::sort(scope.begin(), scope.end());
      scope.erase(std::unique(scope.begin(), scope.end()), scope.end());
      if (best < 0 || scope.size() < best_scope || (scope.size() == best_scope && touch < best_touch)) {
        best = v;
        best_scope = scope.size();
        best_touch = touch;
      }
    }
    if (best < 0) break;
    const int v = best;
    alive[v] = false;

    std::vector<Factor> touched, rest;
    for (auto& f : factors)
      (std::binary_search(f.vars.begin(), f.vars.end(), v) ? touched : rest).push_back(std::move(f));
    std::vector<int> scope;
    for (const auto& f : touched)
      for (int x : f.vars)
        if (x != v) scope.push_back(x);
    std::sort(scope.begin(), scope.end());
    scope.erase(std::unique(scope.begin(), scope.end()), scope.end());

    // Strides of each touched factor along every scope variable and along v.
    const std::size_t nt = touched.size();
    std::vector<std::vector<std::size_t>> stride(nt, std::vector<std::size_t>(scope.size(), 0));
    std::vector<std::size_t> vstride(nt, 0);
    for (std::size_t t = 0; t < nt; ++t) {
      std::size_t s = 1;
      for (int x : touched[t].vars) {
        if (x == v) {
          vstride[t] = s;
        } else {
          auto pos = std::lower_bound(scope.begin(), scope.end(), x) - scope.begin();
          stride[t][pos] = s;
        }
        s *= static_cast<std::size_t>(n);
      }
    }
    std::size_t out_size = 1;
    for (std::size_t i = 0; i < scope.size(); ++i) out_size *= static_cast<std::size_t>(n);
    Factor out{scope, std::vector<BigInt>(out_size)};
    std::vector<int> digit(scope.size(), 0);
    std::vector<std::size_t> base(nt, 0);
    BigInt prod;
    for (std::size_t idx = 0; idx < out_size; ++idx) {
      BigInt& acc = out.data[idx];
      for (int c = 0; c < n; ++c) {
        if (nt == 1) {
          acc += touched[0].data[base[0] + vstride[0] * c];
          continue;
        }
        prod = touched[0].data[base[0] + vstride[0] * c];
        for (std::size_t t = 1; t < nt && prod != 0; ++t) prod *= touched[t].data[base[t] + vstride[t] * c];
        acc += prod;
      }
      // Advance the scope odometer (first scope variable fastest).
      for (std::size_t i = 0; i < scope.size(); ++i) {
        for (std::size_t t = 0; t < nt; ++t) base[t] += stride[t][i];
        if (++digit[i] < n) break;
        for (std::size_t t = 0; t < nt; ++t) base[t] -= stride[t][i] * static_cast<std::size_t>(n);
        digit[i] = 0;
      }
    }
    rest.push_back(std::move(out));
    factors = std::move(rest);
  }
  for (const auto& f : factors) scalar *= f.data[0];
  return scalar;
}

using IntMatrix = std::vector<std::vector<BigInt>>;

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix c(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) mpz_addmul(c[i][j].get_mpz_t(), a[i][l].get_mpz_t(), b[l][j].get_mpz_t());
    }
  return c;
}

// Diagonal of A^l.
std::vector<BigInt> power_diagonal(const IntMatrix& a, int l) {
  IntMatrix p = a;
  for (int i = 2; i < l; ++i) p = multiply(p, a);
  const std::size_t n = a.size();
  std::vector<BigInt> d(n);
  if (l == 1) {
    for (std::size_t i = 0; i < n; ++i) d[i] = a[i][i];
    return d;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mpz_addmul(d[i].get_mpz_t(), p[i][j].get_mpz_t(), a[j][i].get_mpz_t());
  return d;
}

}  // namespace

Rational hom_density(const Graph& h, const StepKernel& u) {
  BigInt den;
  IntMatrix a = u.scaled_integer(den);
  const int n = u.n();
  std::vector<Factor> factors;
  for (auto [x, y] : h.edges()) {
    Factor f{{x, y}, std::vector<BigInt>(static_cast<std::size_t>(n) * n)};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) f.data[static_cast<std::size_t>(i) + static_cast<std::size_t>(j) * n] = a[i][j];
    factors.push_back(std::move(f));
  }
  BigInt num = contract(std::move(factors), h.order(), n);
  Rational r(num, pow(den, static_cast<unsigned>(h.size())) * pow(BigInt(n), static_cast<unsigned>(h.order())));
  r.canonicalize();
  return r;
}

Rational cycle_density(int k, const StepKernel& u) {
  if (k < 1) throw std::invalid_argument("cycle length must be positive");
  BigInt den;
  IntMatrix a = u.scaled_integer(den);
  auto d = power_diagonal(a, k);
  BigInt tr = std::accumulate(d.begin(), d.end(), BigInt(0));
  Rational r(tr, pow(BigInt(den * u.n()), static_cast<unsigned>(k)));
  r.canonicalize();
  return r;
}

Rational cycle_density(int k, const RankOneSum& u) {
  if (k < 1) throw std::invalid_argument("cycle length must be positive");
  const std::size_t r = u.terms.size();
  if (r == 0) return 0;
  // tr((W G)^k) with W the term weights and G the Gram matrix.
  std::vector<std::vector<Rational>> wg(r, std::vector<Rational>(r));
  for (std::size_t s = 0; s < r; ++s)
    for (std::size_t t = 0; t < r; ++t)
      wg[s][t] = Rational(u.terms[s].mult) * u.terms[s].lambda * glue(u.terms[s].f, u.terms[t].f);
  auto p = wg;
  for (int i = 1; i < k; ++i) {
    std::vector<std::vector<Rational>> q(r, std::vector<Rational>(r));
    for (std::size_t s = 0; s < r; ++s)
      for (std::size_t l = 0; l < r; ++l)
        for (std::size_t t = 0; t < r; ++t) q[s][t] += p[s][l] * wg[l][t];
    p = std::move(q);
  }
  Rational tr = 0;
  for (std::size_t s = 0; s < r; ++s) tr += p[s][s];
  return tr;
}

StepFunction apply_operator(const StepKernel& u, const StepFunction& f) {
  const int n = u.n();
  std::vector<Rational> cell(n);
  for (int b = 0; b < n; ++b) cell[b] = f.integral_over(ratio(b, n), ratio(b + 1, n));
  std::vector<Rational> out(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) out[a] += u.at(a, b) * cell[b];
  return StepFunction::uniform(std::move(out));
}

StepFunction apply_operator(const RankOneSum& u, const StepFunction& f) {
  StepFunction out;
  for (const auto& t : u.terms) out = out + t.f.scaled(Rational(t.mult) * t.lambda * glue(t.f, f));
  return out;
}

StepFunction rooted_cycle_density(int l, const StepKernel& u) {
  if (l < 1) throw std::invalid_argument("cycle length must be positive");
  BigInt den;
  IntMatrix a = u.scaled_integer(den);
  auto d = power_diagonal(a, l);
  Rational scale(BigInt(1), pow(den, static_cast<unsigned>(l)) * pow(BigInt(u.n()), static_cast<unsigned>(l - 1)));
  scale.canonicalize();
  std::vector<Rational> v(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) v[i] = Rational(d[i]) * scale;
  return StepFunction::uniform(std::move(v));
}

bool is_balanced(const StepKernel& u) {
  for (const auto& row : u.matrix()) {
    Rational s = 0;
    for (const auto& v : row) s += v;
    if (s != 0) return false;
  }
  return true;
}

bool is_balanced(const RankOneSum& u) { return apply_operator(u, StepFunction::constant(1)).is_zero(); }

}  // namespace deckclass
