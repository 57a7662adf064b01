#include "deckclass/perturbation.hpp"

#include <stdexcept>

#include "deckclass/patterns.hpp"

namespace deckclass {

Rational EpsPolynomial::evaluate(const Rational& eps) const {
  Rational sum = pow(p, static_cast<unsigned>(edges));
  for (const auto& [l, v] : c) sum += pow(p, static_cast<unsigned>(edges - l)) * pow(eps, static_cast<unsigned>(l)) * v;
  return 2 * sum;
}

EpsPolynomial perturbation_coefficients(const Graph& g, const StepKernel& u, const Rational& p, int max_degree) {
  const int m = static_cast<int>(g.size());
  if (max_degree > m) throw std::invalid_argument("max degree exceeds the edge count");
  EpsPolynomial poly;
  poly.p = p;
  poly.edges = m;
  const bool balanced = is_balanced(u);
  for (int l = 2; l <= max_degree; l += 2) {
    Rational c = 0;
    for (const auto& [h, count] : all_subgraph_classes(g, l)) {
      if (balanced && h.min_degree() < 2) continue;
      c += Rational(BigInt(std::to_string(count))) * hom_density(h, u);
    }
    poly.c[l] = c;
  }
  return poly;
}

PerturbedSum eval_perturbed_sum(const Graph& g, const StepKernel& u, const Rational& eps, const Rational& p) {
  StepKernel up = u.affine(p, eps), down = u.affine(p, -eps);
  Rational spread = abs(eps) * u.max_abs();
  bool in_range = p - spread >= 0 && p + spread <= 1;
  return {hom_density(g, up) + hom_density(g, down), in_range};
}

}  // namespace deckclass
