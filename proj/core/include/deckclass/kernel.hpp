#pragma once

#include <vector>

#include "deckclass/graph.hpp"
#include "deckclass/rational.hpp"

namespace deckclass {

// Piecewise constant function on [0,1): value i on [b_i, b_{i+1}).
class StepFunction {
 public:
  StepFunction();  // zero
  StepFunction(std::vector<Rational> breakpoints, std::vector<Rational> values);
  static StepFunction constant(const Rational& c);
  static StepFunction uniform(std::vector<Rational> cell_values);

  const std::vector<Rational>& breakpoints() const { return breaks_; }
  const std::vector<Rational>& values() const { return values_; }

  Rational operator()(const Rational& x) const;
  Rational integral() const;
  bool is_zero() const;
  // Integral over [a, b).
  Rational integral_over(const Rational& a, const Rational& b) const;
  // Cell values on the uniform n-grid; every breakpoint must lie on it.
  std::vector<Rational> on_grid(int n) const;

  StepFunction operator*(const StepFunction& o) const;
  StepFunction operator+(const StepFunction& o) const;
  StepFunction scaled(const Rational& c) const;

 private:
  std::vector<Rational> breaks_;
  std::vector<Rational> values_;
};

Rational glue(const StepFunction& f, const StepFunction& g);

// U(x,y) = M[floor(nx)][floor(ny)].
class StepKernel {
 public:
  explicit StepKernel(std::vector<std::vector<Rational>> matrix);
  static StepKernel constant(const Rational& c);

  int n() const { return static_cast<int>(m_.size()); }
  const Rational& at(int i, int j) const { return m_[i][j]; }
  const std::vector<std::vector<Rational>>& matrix() const { return m_; }

  // Integer matrix A and positive D with M = A / D.
  std::vector<std::vector<BigInt>> scaled_integer(BigInt& denominator) const;

  StepKernel affine(const Rational& shift, const Rational& scale) const;  // shift + scale·U
  Rational max_abs() const;
  bool is_zero() const;

 private:
  std::vector<std::vector<Rational>> m_;
};

struct RankOneTerm {
  Rational lambda;
  StepFunction f;
  BigInt mult = 1;
};

// U = sum of mult·lambda·f⊗f.
struct RankOneSum {
  std::vector<RankOneTerm> terms;
};

bool is_orthonormal(const RankOneSum& u);

Rational hom_density(const Graph& h, const StepKernel& u);

Rational cycle_density(int k, const StepKernel& u);
Rational cycle_density(int k, const RankOneSum& u);

StepFunction apply_operator(const StepKernel& u, const StepFunction& f);
StepFunction apply_operator(const RankOneSum& u, const StepFunction& f);

// Rooted density of C_l at one cycle vertex, as a function of its position.
StepFunction rooted_cycle_density(int l, const StepKernel& u);

bool is_balanced(const StepKernel& u);
bool is_balanced(const RankOneSum& u);

}  // namespace deckclass
