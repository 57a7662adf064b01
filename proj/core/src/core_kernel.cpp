#include "deckclass/core_kernel.hpp"

#include <algorithm>
#include <functional>

namespace deckclass {

Rational CoreKernelParams::gamma_of(int l) const {
  auto it = gamma.find(l);
  return it == gamma.end() ? Rational(0) : it->second;
}

Rational CoreKernelParams::tau_of(int i, int l) const {
  if (i < 0 || i >= static_cast<int>(tau.size())) return 0;
  auto it = tau[i].find(l);
  return it == tau[i].end() ? Rational(0) : it->second;
}

bool CoreKernelParams::all_zero() const {
  for (const auto& s : sigma)
    if (s != 0) return false;
  for (const auto& [l, g] : gamma)
    if (g != 0) return false;
  for (const auto& row : tau)
    for (const auto& [l, t] : row)
      if (t != 0) return false;
  return true;
}

namespace {

void validate(const CoreKernelParams& p) {
  if (p.k < 3 || p.k % 2 == 0) throw std::invalid_argument("k must be odd and at least 3");
  if (p.delta <= 0) throw std::invalid_argument("delta must be positive");
  if (p.m < 0 || static_cast<int>(p.sigma.size()) != p.m)
    throw std::invalid_argument("sigma must list exactly m eigenvalues");
  if (!p.tau.empty() && static_cast<int>(p.tau.size()) != p.m)
    throw std::invalid_argument("tau must have one row per eigenvalue");
  auto check_keys = [&](const std::map<int, Rational>& row) {
    for (const auto& [l, v] : row)
      if (l < 3 || l > p.k || l % 2 == 0) throw std::invalid_argument("cycle orders must be odd in [3, k]");
  };
  check_keys(p.gamma);
  for (const auto& row : p.tau) check_keys(row);
  Rational s = 0;
  for (const auto& x : p.sigma) s += pow(x, static_cast<unsigned>(p.k + 1));
  if (s > p.delta / 2) throw std::invalid_argument("sum of sigma_i^(k+1) exceeds delta/2");
}

BigInt ceil_sqrt(long q) {
  BigInt r;
  BigInt v(q);
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  if (r * r < v) r += 1;
  return r;
}

}  // namespace

CoreKernelSpec build_core_kernel(const CoreKernelParams& p) {
  validate(p);
  CoreKernelSpec s;
  s.requested_ = p;
  s.params_ = p;
  if (s.params_.tau.empty()) s.params_.tau.assign(p.m, {});
  if (p.all_zero()) {
    s.fallback_ = true;
    s.params_.k = p.k + 2;
    s.params_.gamma[p.k + 2] = p.delta / 2;
  }
  const CoreKernelParams& e = s.params_;
  s.q_ = e.m + (e.k - 1) / 2;
  s.Q_ = ceil_sqrt(s.q_);
  const Rational gamma = s.gamma();
  const Rational budget = e.delta / Rational(2 * (2 * e.m + e.k - 1));
  s.omega_.resize(2 * s.q_);
  for (int i = 0; i < e.m; ++i) {
    std::map<int, Rational> plus, minus;
    for (int l = 3; l <= e.k; l += 2) {
      Rational half_sigma = pow(e.sigma[i], static_cast<unsigned>(l)) / 2;
      Rational t = gamma * e.tau_of(i, l) / 2;
      plus[l] = t - half_sigma;
      minus[l] = -t - half_sigma;
    }
    s.omega_[2 * i] = prescribe_powers(e.k, plus, budget);
    s.omega_[2 * i + 1] = prescribe_powers(e.k, minus, budget);
  }
  for (int l = 3; l <= e.k; l += 2) {
    int interval = e.m + (l - 3) / 2;
    std::map<int, Rational> target{{l, e.gamma_of(l) / 2}};
    s.omega_[2 * interval] = prescribe_powers(e.k, target, budget);
    s.omega_[2 * interval + 1] = s.omega_[2 * interval];
  }
  return s;
}

namespace {

void check_order(const CoreKernelSpec& s, int l) {
  if (l < 3 || l > s.params().k || l % 2 == 0) throw std::out_of_range("cycle order must be odd in [3, k]");
}

}  // namespace

Rational core_cycle_density(const CoreKernelSpec& s, int l) {
  check_order(s, l);
  return s.params().gamma_of(l);
}

Rational core_theta_density(const CoreKernelSpec& s, int l, int n, int l2) {
  check_order(s, l);
  check_order(s, l2);
  if (n < 0) throw std::invalid_argument("path length must be non-negative");
  if (l == l2 && n == 0)
    throw std::invalid_argument("C_l glued to itself at a vertex uses core_self_glue_density");
  const auto& p = s.params();
  Rational sum = 0;
  for (int i = 0; i < p.m; ++i) sum += pow(p.sigma[i], static_cast<unsigned>(n)) * p.tau_of(i, l) * p.tau_of(i, l2);
  return sum;
}

Rational core_self_glue_density(const CoreKernelSpec& s, int l) {
  check_order(s, l);
  const auto& p = s.params();
  Rational g = p.gamma_of(l);
  Rational sum = g * g * Rational(s.root() * s.root());
  for (int i = 0; i < p.m; ++i) sum += p.tau_of(i, l) * p.tau_of(i, l);
  return sum;
}

Rational core_c_k_plus_1_bound(const CoreKernelSpec& s) {
  const auto& p = s.params();
  const unsigned e = static_cast<unsigned>(p.k + 1);
  Rational sum = 0;
  for (const auto& x : p.sigma) sum += pow(x, e);
  for (int h = 0; h < s.halves(); ++h) sum += power_sum(s.omega(h), e);
  return sum;
}

namespace {

// Breakpoints 0, interval edges and half midpoints, tail start, 1.
std::vector<Rational> layout_breaks(const CoreKernelSpec& s) {
  Rational unit(BigInt(1), s.root() * s.root());
  std::vector<Rational> b;
  for (int h = 0; h <= s.halves(); ++h) b.push_back(unit * ratio(h, 2));
  if (b.back() != 1) b.push_back(1);
  return b;
}

StepFunction from_halves(const CoreKernelSpec& s, const std::vector<Rational>& half_values, const Rational& tail) {
  auto b = layout_breaks(s);
  std::vector<Rational> v = half_values;
  if (static_cast<int>(b.size()) - 1 > s.halves()) v.push_back(tail);
  return StepFunction(std::move(b), std::move(v));
}

}  // namespace

StepFunction core_f(const CoreKernelSpec& s, int i) {
  if (i < 0 || i >= s.params().m) throw std::out_of_range("eigenfunction index out of range");
  std::vector<Rational> v(s.halves(), Rational(0));
  v[2 * i] = Rational(s.root());
  v[2 * i + 1] = -Rational(s.root());
  return from_halves(s, v, 0);
}

StepFunction core_g(const CoreKernelSpec& s, int l) {
  check_order(s, l);
  int interval = s.params().m + (l - 3) / 2;
  std::vector<Rational> v(s.halves(), Rational(0));
  v[2 * interval] = v[2 * interval + 1] = Rational(s.root());
  return from_halves(s, v, 0);
}

StepFunction core_rooted_cycle_closed_form(const CoreKernelSpec& s, int l) {
  StepFunction out = core_g(s, l).scaled(s.params().gamma_of(l) / s.gamma());
  for (int i = 0; i < s.params().m; ++i) out = out + core_f(s, i).scaled(s.params().tau_of(i, l));
  return out;
}

CoreEvaluator::CoreEvaluator(const CoreKernelSpec& spec) : spec_(spec) {}

const Rational& CoreEvaluator::fine_power(int half, int e) const {
  auto key = std::make_pair(half, e);
  auto it = powers_.find(key);
  if (it == powers_.end()) it = powers_.emplace(key, power_sum(spec_.omega(half), static_cast<unsigned>(e))).first;
  return it->second;
}

// Cycle through the root with weight functions on the other l-1 vertices.
// Fine functions never mix across halves or with f_i, so each half
// contributes its own l-th power sum times phi^2 = 2Q^2.
CoreEvaluator::Coarse CoreEvaluator::cycle_at_root(int l, const std::vector<Coarse>& weights) const {
  const int halves = spec_.halves();
  const Rational q2(spec_.root() * spec_.root());
  Coarse out(halves + 1, Rational(0));
  for (int h = 0; h < halves; ++h) {
    Rational prod = 1;
    for (const auto& w : weights) prod *= w[h];
    out[h] = fine_power(h, l) * 2 * q2 * prod;
  }
  const auto& p = spec_.params();
  for (int i = 0; i < p.m; ++i) {
    Rational prod = pow(p.sigma[i], static_cast<unsigned>(l)) * q2;
    for (const auto& w : weights) prod *= (w[2 * i] + w[2 * i + 1]) / 2;
    out[2 * i] += prod;
    out[2 * i + 1] += prod;
  }
  return out;
}

CoreEvaluator::Coarse CoreEvaluator::apply(const Coarse& w) const {
  Coarse out(w.size(), Rational(0));
  const auto& p = spec_.params();
  for (int i = 0; i < p.m; ++i) {
    Rational v = p.sigma[i] * (w[2 * i] - w[2 * i + 1]) / 2;
    out[2 * i] = v;
    out[2 * i + 1] = -v;
  }
  return out;
}

Rational CoreEvaluator::integrate(const Coarse& w) const {
  const Rational q2(spec_.root() * spec_.root());
  const Rational half = 1 / (2 * q2);
  Rational s = 0;
  for (int h = 0; h < spec_.halves(); ++h) s += w[h] * half;
  s += w.back() * (1 - Rational(spec_.intervals()) / q2);
  return s;
}

StepFunction CoreEvaluator::to_step(const Coarse& w) const {
  return from_halves(spec_, Coarse(w.begin(), w.end() - 1), w.back());
}

std::optional<CoreEvaluator::Coarse> CoreEvaluator::rooted(const Graph& h, const std::vector<std::vector<int>>& blocks,
                                                           const std::vector<std::vector<int>>& vertex_blocks, int v,
                                                           int parent_block) const {
  Coarse acc(spec_.halves() + 1, Rational(1));
  for (int b : vertex_blocks[v]) {
    if (b == parent_block) continue;
    const auto& edges = blocks[b];
    if (edges.size() == 1) {
      auto [x, y] = h.edges()[edges[0]];
      int other = x == v ? y : x;
      auto below = rooted(h, blocks, vertex_blocks, other, b);
      if (!below) return std::nullopt;
      Coarse u = apply(*below);
      for (std::size_t c = 0; c < acc.size(); ++c) acc[c] *= u[c];
      continue;
    }
    // A block is a cycle iff each of its vertices meets exactly two of its edges.
    std::map<int, std::vector<int>> nbr;
    for (int e : edges) {
      auto [x, y] = h.edges()[e];
      nbr[x].push_back(y);
      nbr[y].push_back(x);
    }
    if (nbr.size() != edges.size()) return std::nullopt;
    for (const auto& [x, ns] : nbr)
      if (ns.size() != 2) return std::nullopt;
    std::vector<Coarse> weights;
    int prev = v, cur = nbr[v][0];
    while (cur != v) {
      auto w = rooted(h, blocks, vertex_blocks, cur, b);
      if (!w) return std::nullopt;
      weights.push_back(std::move(*w));
      int next = nbr[cur][0] == prev ? nbr[cur][1] : nbr[cur][0];
      prev = cur;
      cur = next;
    }
    Coarse c = cycle_at_root(static_cast<int>(edges.size()), weights);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] *= c[i];
  }
  return acc;
}

std::optional<Rational> CoreEvaluator::density(const Graph& h) const {
  auto blocks_list = blocks(h);
  std::vector<std::vector<int>> vertex_blocks(h.order());
  for (std::size_t b = 0; b < blocks_list.size(); ++b) {
    std::vector<int> vs;
    for (int e : blocks_list[b]) {
      vs.push_back(h.edges()[e].first);
      vs.push_back(h.edges()[e].second);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (int v : vs) vertex_blocks[v].push_back(static_cast<int>(b));
  }
  Rational total = 1;
  for (const auto& comp : connected_components(h)) {
    auto f = rooted(h, blocks_list, vertex_blocks, comp.front(), -1);
    if (!f) return std::nullopt;
    total *= integrate(*f);
    if (total == 0) return total;  // remaining components cannot change a zero
  }
  return total;
}

StepFunction CoreEvaluator::rooted_cycle(int l) const {
  std::vector<Coarse> ones(l - 1, Coarse(spec_.halves() + 1, Rational(1)));
  return to_step(cycle_at_root(l, ones));
}

namespace {

int walsh_depth(const CoreKernelSpec& s) {
  BigInt most = 0;
  for (int h = 0; h < s.halves(); ++h) most = std::max(most, s.omega(h).total());
  int d = 0;
  while (BigInt(1) << d <= most) ++d;  // need 2^d - 1 >= most
  return d;
}

int popcount_parity(unsigned x) { return __builtin_popcount(x) & 1; }

}  // namespace

BigInt materialized_cells(const CoreKernelSpec& s) {
  // 2^d subcells per half; 2Q^2 halves fill [0,1).
  return BigInt(2) * s.root() * s.root() * (BigInt(1) << walsh_depth(s));
}

StepKernel materialize(const CoreKernelSpec& s, int max_cells) {
  BigInt cells = materialized_cells(s);
  if (cells > max_cells)
    throw MaterializationRefused("materialization needs " + cells.get_str() + " cells, above the budget of " +
                                 std::to_string(max_cells));
  const int n = static_cast<int>(cells.get_si());
  const int d = walsh_depth(s);
  const int sub = 1 << d;
  const Rational q2(s.root() * s.root());
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  for (int h = 0; h < s.halves(); ++h) {
    const int base = h * sub;
    // Same-value Walsh functions add up, so accumulate one coefficient per r.
    std::vector<Rational> coeff(sub, Rational(0));
    unsigned r = 1;
    for (const auto& w : s.omega(h).items())
      for (BigInt c = 0; c < w.mult; ++c) coeff[r++] = w.value * 2 * q2;
    for (int x = 0; x < sub; ++x)
      for (int y = 0; y < sub; ++y) {
        Rational v = 0;
        for (unsigned t = 1; t < r; ++t) {
          bool neg = popcount_parity(t & static_cast<unsigned>(x)) != popcount_parity(t & static_cast<unsigned>(y));
          if (neg)
            v -= coeff[t];
          else
            v += coeff[t];
        }
        m[base + x][base + y] += v;
      }
  }
  const auto& p = s.params();
  for (int i = 0; i < p.m; ++i) {
    const int base = 2 * i * sub;
    for (int x = 0; x < 2 * sub; ++x)
      for (int y = 0; y < 2 * sub; ++y) {
        bool same = (x < sub) == (y < sub);
        Rational v = p.sigma[i] * q2;
        m[base + x][base + y] += same ? v : Rational(-v);
      }
  }
  return StepKernel(std::move(m));
}

}  // namespace deckclass
