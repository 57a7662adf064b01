#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "deckclass/graph.hpp"
#include "deckclass/kernel.hpp"
#include "deckclass/power_sums.hpp"

namespace deckclass {

// Parameters of the balanced kernel: eigenvalues sigma_i with eigenfunctions
// f_i, cycle densities gamma_l, and the coefficients tau_{i,l} of f_i in the
// rooted C_l density. Odd l in [3, k]; absent keys mean zero.
struct CoreKernelParams {
  int k = 3;
  Rational delta = 1;
  int m = 0;
  std::vector<Rational> sigma;
  std::map<int, Rational> gamma;
  std::vector<std::map<int, Rational>> tau;

  Rational gamma_of(int l) const;
  Rational tau_of(int i, int l) const;  // i is 0-based
  bool all_zero() const;
};

// Layout: q = m + (k-1)/2 intervals of length 1/Q^2 with Q = ceil(sqrt(q)),
// each split into a + half and a - half; U vanishes on [q/Q^2, 1). Interval
// i < m carries f_i = ±Q, interval m + (l-3)/2 carries g_l = Q. On each half
// the fine part of U is a sum of omega·phi⊗phi over orthonormal mean-zero
// functions phi, one per unit of multiplicity.
class CoreKernelSpec {
 public:
  const CoreKernelParams& requested() const { return requested_; }
  const CoreKernelParams& params() const { return params_; }
  bool fallback() const { return fallback_; }
  int intervals() const { return q_; }
  const BigInt& root() const { return Q_; }  // Q; gamma = 1/Q
  Rational gamma() const { return Rational(BigInt(1), Q_); }
  // Half index h = 2·interval + (plus ? 0 : 1), 0-based.
  const WeightedMultiset& omega(int half) const { return omega_.at(half); }
  int halves() const { return 2 * q_; }

  friend CoreKernelSpec build_core_kernel(const CoreKernelParams& p);

 private:
  CoreKernelParams requested_, params_;
  bool fallback_ = false;
  int q_ = 0;
  BigInt Q_;
  std::vector<WeightedMultiset> omega_;
};

CoreKernelSpec build_core_kernel(const CoreKernelParams& p);

Rational core_cycle_density(const CoreKernelSpec& s, int l);
// C_l ⊕ P_n ⊕ C_l2 from the parameters; (l, 0, l) is the glued square.
Rational core_theta_density(const CoreKernelSpec& s, int l, int n, int l2);
Rational core_self_glue_density(const CoreKernelSpec& s, int l);
Rational core_c_k_plus_1_bound(const CoreKernelSpec& s);

StepFunction core_f(const CoreKernelSpec& s, int i);  // 0-based
StepFunction core_g(const CoreKernelSpec& s, int l);
// (gamma_l / gamma) g_l + sum_i tau_{i,l} f_i.
StepFunction core_rooted_cycle_closed_form(const CoreKernelSpec& s, int l);

// Exact t(H, U) straight from the spec for every H whose blocks are cycles or
// single edges; nullopt for any other H.
class CoreEvaluator {
 public:
  explicit CoreEvaluator(const CoreKernelSpec& spec);
  std::optional<Rational> density(const Graph& h) const;
  // Rooted density of C_l as a step function (exact, symbolic path).
  StepFunction rooted_cycle(int l) const;
  const CoreKernelSpec& spec() const { return spec_; }

 private:
  using Coarse = std::vector<Rational>;  // one value per half, then the tail
  const Rational& fine_power(int half, int e) const;
  Coarse cycle_at_root(int l, const std::vector<Coarse>& weights) const;
  Coarse apply(const Coarse& w) const;
  Rational integrate(const Coarse& w) const;
  StepFunction to_step(const Coarse& w) const;
  std::optional<Coarse> rooted(const Graph& h, const std::vector<std::vector<int>>& blocks,
                               const std::vector<std::vector<int>>& vertex_blocks, int v, int parent_block) const;

  const CoreKernelSpec& spec_;
  mutable std::map<std::pair<int, int>, Rational> powers_;
};

class MaterializationRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Grid size needed to realize the spec exactly.
BigInt materialized_cells(const CoreKernelSpec& s);
StepKernel materialize(const CoreKernelSpec& s, int max_cells = 512);

}  // namespace deckclass
