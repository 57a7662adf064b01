#pragma once

#include <map>

#include "deckclass/graph.hpp"
#include "deckclass/kernel.hpp"

namespace deckclass {

// t(G, p + eps·U) + t(G, p - eps·U) = 2·sum over even l of p^(m-l)·eps^l·c_l,
// with c_0 = 1 and c_l the sum of t(F, U) over l-edge subsets F.
struct EpsPolynomial {
  Rational p{1, 2};
  int edges = 0;
  std::map<int, Rational> c;  // even l >= 2

  Rational evaluate(const Rational& eps) const;
};

// Coefficients c_2..c_L. Subsets with a degree-one vertex are skipped when U
// is balanced, since they contribute zero.
EpsPolynomial perturbation_coefficients(const Graph& g, const StepKernel& u, const Rational& p, int max_degree);

struct PerturbedSum {
  Rational value;
  bool in_range;  // both p ± eps·U stay within [0, 1]
};

PerturbedSum eval_perturbed_sum(const Graph& g, const StepKernel& u, const Rational& eps,
                                const Rational& p = Rational(1, 2));

}  // namespace deckclass
