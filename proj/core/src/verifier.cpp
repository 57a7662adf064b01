#include "deckclass/verifier.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <random>
#include <unordered_map>

#include "deckclass/canonical.hpp"
#include "deckclass/patterns.hpp"
#include "deckclass/perturbation.hpp"

namespace deckclass {

bool WitnessReport::certified() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

Rational big(std::uint64_t v) { return Rational(BigInt(std::to_string(v))); }

// Structural checks shared by every witness kernel.
void kernel_checks(WitnessReport& r, const CoreKernelSpec& spec, const CoreEvaluator& ev) {
  const auto& p = spec.params();
  Rational sig = 0;
  for (const auto& s : p.sigma) sig += pow(s, static_cast<unsigned>(p.k + 1));
  r.add("sum of sigma^(k+1) <= delta/2", sig <= p.delta / 2);
  r.add("balanced: t(P2) = 0", *ev.density(path_graph(2)) == 0);
  r.add("non-zero: t(C4) > 0", *ev.density(cycle_graph(4)) > 0);
  Rational bound = core_c_k_plus_1_bound(spec);
  r.add("t(C_{k+1}) <= delta", bound <= p.delta);
  r.add("t(C_{k+1}) closed form = evaluator", *ev.density(cycle_graph(p.k + 1)) == bound);
}

using CoefficientFn = std::function<Rational(const CoreEvaluator&, int, WitnessReport&)>;

WitnessReport run_class2(const std::string& name, const DecisionTrace& trace, const CountVector& cv,
                         const CoefficientFn& coefficient, int max_shrink) {
  for (int shrink = 0;; ++shrink) {
    WitnessReport r;
    r.graph = name;
    r.rule = trace.final_step().rule;
    WitnessRecipe recipe = class2_recipe(trace, cv, shrink);
    CoreKernelSpec spec = build_core_kernel(recipe.params);
    CoreEvaluator ev(spec);
    const int target = recipe.target_degree;
    for (int l = 2; l <= target; l += 2) r.coefficients[l] = coefficient(ev, l, r);
    if (r.coefficients[target] >= 0 && shrink < max_shrink) continue;
    r.recipe = recipe;
    kernel_checks(r, spec, ev);
    PatternId cycle = target == 8 ? PatternId::C8 : target == 10 ? PatternId::C10 : PatternId::C12;
    r.add("delta·s(C_target) <= 1/2", recipe.params.delta * big(cv.count(cycle)) <= Rational(1, 2));
    for (int l = 2; l < target; l += 2) r.add("c" + std::to_string(l) + " = 0", r.coefficients[l] == 0);
    r.add("c" + std::to_string(target) + " < 0", r.coefficients[target] < 0);
    return r;
  }
}

WitnessReport run_null(const std::string& name, int depth, const CoefficientFn& coefficient) {
  WitnessReport r;
  r.graph = name;
  r.rule = "null";
  WitnessRecipe recipe = class3_null_recipe(std::max(depth, 4));
  recipe.target_degree = depth;
  CoreKernelSpec spec = build_core_kernel(recipe.params);
  CoreEvaluator ev(spec);
  for (int l = 2; l <= depth; l += 2) r.coefficients[l] = coefficient(ev, l, r);
  r.recipe = recipe;
  kernel_checks(r, spec, ev);
  for (int l = 2; l <= depth; l += 2) r.add("c" + std::to_string(l) + " = 0", r.coefficients[l] == 0);
  return r;
}

CoefficientFn graph_coefficient(const Graph& g) {
  return [&g](const CoreEvaluator& ev, int l, WitnessReport& r) -> Rational {
    Rational sum = 0;
    bool complete = true;
    // Balanced kernels give zero on every subgraph with a degree-one vertex.
    for (const auto& [h, count] : min_degree_two_subgraphs(g, l)) {
      auto t = ev.density(h);
      if (!t) {
        complete = false;
        continue;
      }
      sum += big(count) * *t;
    }
    if (!complete) r.add("c" + std::to_string(l) + ": every subgraph class has cycle and edge blocks only", false);
    return sum;
  };
}

struct PrincipalEntry {
  Graph graph;
  std::optional<PatternId> id;
  std::vector<PatternId> contains;  // catalogue deck patterns inside it
};

const std::vector<PrincipalEntry>& principal_entries(int l) {
  static std::mutex mu;
  static std::map<int, std::vector<PrincipalEntry>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(l);
  if (it != cache.end()) return it->second;
  std::map<std::string, PatternId> by_form;
  for (const auto& info : catalogue())
    if (!info.auxiliary) by_form[canonical_form(info.graph)] = info.id;
  std::vector<PrincipalEntry> out;
  for (const auto& h : enumerate_principal(l)) {
    PrincipalEntry e{h, std::nullopt, {}};
    auto f = by_form.find(canonical_form(h));
    if (f != by_form.end()) e.id = f->second;
    for (const auto& info : catalogue()) {
      if (info.auxiliary || info.graph.size() < 3 || info.graph.size() > h.size()) continue;
      if (contains_subgraph(h, info.graph)) e.contains.push_back(info.id);
    }
    out.push_back(std::move(e));
  }
  return cache.emplace(l, std::move(out)).first->second;
}

CoefficientFn count_coefficient(const CountVector& cv) {
  return [&cv](const CoreEvaluator& ev, int l, WitnessReport& r) -> Rational {
    if (l == 2) {
      Rational p2 = *ev.density(path_graph(2));
      Rational p1p1 = *ev.density(disjoint_union(path_graph(1), path_graph(1)));
      return big(cv.count(PatternId::P2)) * p2 + big(cv.count(PatternId::P1_U_P1)) * p1p1;
    }
    Rational sum = 0;
    for (const auto& e : principal_entries(l)) {
      Rational t = *ev.density(e.graph);
      if (t == 0) continue;
      bool forced_zero = std::any_of(e.contains.begin(), e.contains.end(),
                                     [&](PatternId id) { return cv.count(id) == 0; });
      if (forced_zero) continue;
      if (e.id)
        sum += big(cv.count(*e.id)) * t;
      else
        r.add("uncatalogued principal graph " + to_graph6(e.graph) + " has zero density", false);
    }
    return sum;
  };
}

}  // namespace

WitnessReport verify_class2(const Graph& g, int max_shrink) {
  GraphVerdict v = classify_graph(g);
  if (v.status != VerdictStatus::not_locally_common)
    throw std::invalid_argument("graph is not classified as not locally common");
  CountVector cv = count_vector(g);
  return run_class2(to_graph6(g), v.trace, cv, graph_coefficient(g), max_shrink);
}

WitnessReport verify_class3_null(const Graph& g) {
  GraphVerdict v = classify_graph(g);
  if (!v.deck_class || *v.deck_class != DeckClass::III)
    throw std::invalid_argument("graph cascade does not stop in Class III");
  return run_null(to_graph6(g), v.depth, graph_coefficient(g));
}

WitnessReport verify_class2_counts(const CountVector& cv, const DecisionTrace& trace, int max_shrink) {
  return run_class2("counts", trace, cv, count_coefficient(cv), max_shrink);
}

WitnessReport verify_class3_null_counts(const CountVector& cv, int depth) {
  return run_null("counts", depth, count_coefficient(cv));
}

WitnessReport verify_core_identities(const CoreKernelSpec& spec, int max_cells, int max_path) {
  WitnessReport r;
  r.graph = "core-kernel";
  r.rule = "identities";
  StepKernel u = materialize(spec, max_cells);
  CoreEvaluator ev(spec);
  const auto& p = spec.params();
  auto tag = [](const std::string& s) { return s + " grid = symbolic"; };
  r.add("grid balanced", is_balanced(u));
  r.add("grid non-zero", cycle_density(4, u) > 0);
  std::map<int, StepFunction> rooted;
  for (int l = 3; l <= p.k; l += 2) {
    rooted[l] = rooted_cycle_density(l, u);
    const std::string c = "t(C" + std::to_string(l) + ")";
    r.add(tag(c), cycle_density(l, u) == core_cycle_density(spec, l));
    r.add("rooted C" + std::to_string(l) + " grid = closed form",
          (rooted[l] + core_rooted_cycle_closed_form(spec, l).scaled(-1)).is_zero());
    r.add("rooted C" + std::to_string(l) + " evaluator = closed form",
          (ev.rooted_cycle(l) + core_rooted_cycle_closed_form(spec, l).scaled(-1)).is_zero());
    r.add(tag(c + "⊕" + c), glue(rooted[l], rooted[l]) == core_self_glue_density(spec, l));
  }
  for (int l = 3; l <= p.k; l += 2) {
    StepFunction moved = rooted[l];
    for (int n = 0; n <= max_path; ++n) {
      if (n > 0) moved = apply_operator(u, moved);
      for (int l2 = 3; l2 <= p.k; l2 += 2) {
        if (l2 == l && n == 0) continue;
        const std::string name =
            "t(C" + std::to_string(l2) + "⊕P" + std::to_string(n) + "⊕C" + std::to_string(l) + ")";
        r.add(tag(name), glue(rooted[l2], moved) == core_theta_density(spec, l2, n, l));
      }
    }
  }
  for (int i = 0; i < p.m; ++i) {
    StepFunction f = core_f(spec, i);
    r.add("U f" + std::to_string(i + 1) + " = sigma f" + std::to_string(i + 1),
          (apply_operator(u, f) + f.scaled(-p.sigma[i])).is_zero());
  }
  Rational top = cycle_density(p.k + 1, u);
  r.add(tag("t(C_{k+1})"), top == core_c_k_plus_1_bound(spec));
  r.add("t(C_{k+1}) <= delta", top <= p.delta);
  return r;
}

WitnessReport verify_taylor(const Graph& g, const StepKernel& u, int trials, std::uint64_t seed) {
  WitnessReport r;
  r.graph = to_graph6(g);
  r.rule = "taylor";
  const int m = static_cast<int>(g.size());
  EpsPolynomial poly = perturbation_coefficients(g, u, Rational(1, 2), m - m % 2);
  r.coefficients = poly.c;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> den(1, 16);
  r.add("eps = 0", poly.evaluate(0) == eval_perturbed_sum(g, u, 0).value);
  for (int t = 0; t < trials; ++t) {
    long d = den(rng);
    std::uniform_int_distribution<long> num(-d, d);
    Rational eps(num(rng), d);
    eps.canonicalize();
    r.add("eps = " + to_string(eps), poly.evaluate(eps) == eval_perturbed_sum(g, u, eps).value);
  }
  return r;
}

}  // namespace deckclass
