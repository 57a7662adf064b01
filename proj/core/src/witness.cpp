#include "deckclass/witness.hpp"

#include <stdexcept>

namespace deckclass {

namespace {

Rational form(const Matrix2& m, const Rational& x, const Rational& y) {
  return m[0][0] * x * x + 2 * m[0][1] * x * y + m[1][1] * y * y;
}

Rational count_of(const CountVector& cv, PatternId id) { return Rational(BigInt(std::to_string(cv.count(id)))); }

}  // namespace

std::vector<Rational> negative_direction(const Matrix2& m) {
  if (m[0][1] != m[1][0]) throw std::invalid_argument("matrix must be symmetric");
  const Rational& a = m[0][0];
  const Rational& b = m[0][1];
  const Rational& c = m[1][1];
  const Rational det = a * c - b * b;
  if (a >= 0 && c >= 0 && det >= 0) throw std::invalid_argument("matrix is positive semidefinite");
  std::vector<std::pair<Rational, Rational>> tries{{1, -1}, {1, 1}, {1, 0}, {0, 1}};
  std::pair<Rational, Rational> z;
  bool found = false;
  for (const auto& t : tries)
    if (form(m, t.first, t.second) < 0) {
      z = t;
      found = true;
      break;
    }
  if (!found) {
    // Here a and c are >= 0 (else a unit vector works) and det < 0.
    if (a == 0) {
      // 2bt + ct^2 at t = -b/c is -b^2/c < 0.
      Rational t = c == 0 ? Rational(b > 0 ? -1 : 1) : Rational(-b / c);
      z = {1, t};
    } else {
      // The minimum over x for fixed y = 1 is det / a < 0.
      z = {-b / a, 1};
    }
  }
  Rational v = form(m, z.first, z.second);
  if (v >= 0) throw std::logic_error("negative direction search failed");
  if (auto root = exact_root(-v, 2)) {
    z.first /= *root;
    z.second /= *root;
  } else {
    while (form(m, z.first, z.second) > -1) {
      z.first *= 2;
      z.second *= 2;
    }
  }
  return {z.first, z.second};
}

namespace {

// delta = 2^-a with a >= 2 a multiple of root_degree and
// delta·(2·s(C_target) + 2) <= 1, then shrunk by 2^-root_degree per step.
Rational pick_delta(const Rational& target_count, int root_degree, int shrink) {
  int a = root_degree;
  while (a < 2) a += root_degree;
  auto d = [](int e) { return Rational(BigInt(1), BigInt(1) << e); };
  while (d(a) * (2 * target_count + 2) > 1) a += root_degree;
  return d(a + shrink * root_degree);
}

CoreKernelParams base(int target, const Rational& delta, int m) {
  CoreKernelParams p;
  p.k = target - 1;
  p.delta = delta;
  p.m = m;
  p.sigma.assign(m, Rational(0));
  p.tau.assign(m, {});
  return p;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

}  // namespace

WitnessRecipe class2_recipe(const DecisionTrace& trace, const CountVector& cv, int shrink) {
  if (trace.steps.empty() || !trace.final_step().outcome || *trace.final_step().outcome != DeckClass::II)
    throw std::invalid_argument("trace does not end in Class II");
  using P = PatternId;
  const DecisionStep& step = trace.final_step();
  const std::string& rule = step.rule;
  const int target = step.deck;
  const PatternId cycle = target == 8 ? P::C8 : target == 10 ? P::C10 : P::C12;
  const Rational s_target = count_of(cv, cycle);
  WitnessRecipe w;
  w.rule = rule;
  w.target_degree = target;
  w.shrink_steps = shrink;
  auto delta_for = [&](int root_degree) { return pick_delta(s_target, root_degree, shrink); };

  // Two glued cycles C_a ⊕ C_b get tau_a = 1, tau_b = -1; disjoint ones the
  // same on gamma.
  auto glued = [&](std::initializer_list<std::pair<int, int>> taus) {
    CoreKernelParams p = base(target, delta_for(1), 1);
    for (auto [l, v] : taus) p.tau[0][l] = v;
    return p;
  };
  auto disjoint = [&](int a, int b) {
    CoreKernelParams p = base(target, delta_for(1), 0);
    p.gamma[a] = 1;
    p.gamma[b] = -1;
    return p;
  };

  if (rule == "deck8.row4" || rule == "deck8.row9") {
    w.params = glued({{3, 1}, {5, -1}});
  } else if (rule == "deck8.row6" || rule == "deck8.row11") {
    w.params = disjoint(3, 5);
  } else if (rule == "deck10.glued-c3c7") {
    w.params = glued({{3, 1}, {7, -1}});
  } else if (rule == "deck10.disjoint-c3c7") {
    w.params = disjoint(3, 7);
  } else if (rule == "deck10.indefinite-form") {
    Rational s33 = count_of(cv, P::C3_P4_C3), s35 = count_of(cv, P::C3_P2_C5), s55 = count_of(cv, P::C5_O_C5);
    w.z = negative_direction({{{s33, s35 / 2}, {s35 / 2, s55}}});
    Rational delta = delta_for(1);
    CoreKernelParams p = base(target, delta, 1);
    p.sigma[0] = delta / 2;
    p.tau[0][3] = 4 * w.z[0] / (delta * delta);
    p.tau[0][5] = w.z[1];
    w.params = p;
  } else if (starts_with(rule, "deck12.")) {
    const Rational s12 = s_target;
    const Rational p6 = count_of(cv, P::C3_P6_C3);
    const Rational k_const = 1 + s12 + p6;
    const bool form_zero = starts_with(rule, "deck12.form-zero");
    const bool form_c5c5 = starts_with(rule, "deck12.form-c5c5-only");
    const bool form_c3c3 = starts_with(rule, "deck12.form-c3p4c3-only");
    const bool rank_one = starts_with(rule, "deck12.form-rank-one");
    if ((form_zero || form_c5c5) && (ends_with(rule, ".glued-c3c9") || ends_with(rule, ".bridged-c3c7"))) {
      Rational delta = delta_for(2);
      CoreKernelParams p = base(target, delta, 1);
      p.sigma[0] = *exact_root(delta, 2);
      p.tau[0][3] = 1;
      p.tau[0][7] = p.tau[0][9] = -k_const / delta;
      w.params = p;
    } else if (form_zero && ends_with(rule, ".indefinite-long-form")) {
      Rational p4c5 = count_of(cv, P::C3_P4_C5), c5p2c5 = count_of(cv, P::C5_P2_C5);
      w.z = negative_direction({{{p6, p4c5 / 2}, {p4c5 / 2, c5p2c5}}});
      Rational delta = delta_for(1);
      CoreKernelParams p = base(target, delta, 1);
      p.sigma[0] = delta / 2;
      p.tau[0][3] = 8 * w.z[0] / (delta * delta * delta);
      p.tau[0][5] = 2 * w.z[1] / delta;
      w.params = p;
    } else if (form_zero && (ends_with(rule, ".c5-beside-bridged-c3c3") || ends_with(rule, ".disjoint-c5c7"))) {
      Rational delta = delta_for(1);
      CoreKernelParams p = base(target, delta, 1);
      p.sigma[0] = delta;
      p.tau[0][3] = 1;
      p.gamma[5] = -k_const / delta;
      p.gamma[7] = 1;
      w.params = p;
    } else if (form_c3c3 && (ends_with(rule, ".glued-c3c9") || ends_with(rule, ".glued-c5c7"))) {
      w.params = glued({{3, 1}, {5, 1}, {7, -1}, {9, -1}});
    } else if (rank_one && (ends_with(rule, ".negative-a") || ends_with(rule, ".mixed-term"))) {
      Rational s55 = count_of(cv, P::C5_O_C5), s35 = count_of(cv, P::C3_P2_C5);
      Rational p4c5 = count_of(cv, P::C3_P4_C5), c5p2c5 = count_of(cv, P::C5_P2_C5);
      Rational c3p2c7 = count_of(cv, P::C3_P2_C7), c57 = count_of(cv, P::C5_O_C7);
      Rational z3 = -2 * s55, z5 = s35;
      auto a_form = [&](const Rational& x, const Rational& y) -> Rational { return p6 * x * x + p4c5 * x * y + c5p2c5 * y * y; };
      while (abs(a_form(z3, z5)) > 1) {
        z3 /= 2;
        z5 /= 2;
      }
      w.z = {z3, z5};
      Rational delta = delta_for(4);
      Rational quarter = *exact_root(delta, 4);
      Rational half = quarter * quarter;
      CoreKernelParams p = base(target, delta, 1);
      p.sigma[0] = quarter;
      p.tau[0][3] = z3 / half;
      p.tau[0][5] = z5;
      Rational mixed = z3 * c3p2c7 + z5 * c57;
      if (mixed != 0) p.tau[0][7] = -2 * half / mixed;
      w.params = p;
    } else if (starts_with(rule, "deck12.no-c3-pairs") &&
               (ends_with(rule, ".glued-c3c9") || ends_with(rule, ".disjoint-c3c9"))) {
      CoreKernelParams p = glued({{3, 1}, {9, -1}});
      p.gamma[3] = 1;
      p.gamma[9] = -1;
      w.params = p;
    } else if (ends_with(rule, ".glued-c3c9")) {
      w.params = glued({{3, 1}, {9, -1}});
    } else if (ends_with(rule, ".glued-c5c7")) {
      w.params = glued({{5, 1}, {7, -1}});
    } else if (ends_with(rule, ".disjoint-c5c7")) {
      w.params = disjoint(5, 7);
    } else {
      throw std::logic_error("no witness recipe for rule " + rule);
    }
  } else {
    throw std::logic_error("no witness recipe for rule " + rule);
  }
  return w;
}

WitnessRecipe class3_null_recipe(int depth) {
  if (depth < 4 || depth % 2) throw std::invalid_argument("null witness depth must be even and at least 4");
  WitnessRecipe w;
  w.rule = "null";
  w.target_degree = depth;
  w.params = base(depth, Rational(1), 0);
  return w;
}

}  // namespace deckclass
