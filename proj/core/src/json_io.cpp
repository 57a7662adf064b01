#include "deckclass/json_io.hpp"

#include <stdexcept>

namespace deckclass {

Json rational_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(BigInt(std::to_string(j.get<long long>())));
  throw std::invalid_argument("expected a rational as \"p/q\" or an integer");
}

Json trace_json(const DecisionTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    Json cond = Json::object();
    for (const auto& c : s.conditions) cond[c.name] = c.value;
    steps.push_back({{"deck", s.deck},
                     {"rule", s.rule},
                     {"conditions", cond},
                     {"outcome", s.outcome ? Json(to_string(*s.outcome)) : Json("pass-through")}});
  }
  return steps;
}

Json verdict_json(const GraphVerdict& v) {
  Json j{{"schema", kSchema},
         {"status", to_string(v.status)},
         {"deck_class", v.deck_class ? Json(to_string(*v.deck_class)) : Json(nullptr)},
         {"depth", v.depth},
         {"edges", v.edges},
         {"trace", trace_json(v.trace)},
         {"notes", v.trace.notes}};
  if (v.trace.table_row) j["table_row"] = *v.trace.table_row;
  return j;
}

Json counts_json(const CountVector& cv) {
  Json c = Json::object();
  for (const auto& info : catalogue()) c[info.name] = cv.count(info.id);
  Json j{{"schema", kSchema}, {"counts", c}};
  if (cv.edge_count) j["edges"] = *cv.edge_count;
  return j;
}

CountVector counts_from_json(const Json& j) {
  const Json& c = j.contains("counts") ? j.at("counts") : j;
  CountVector cv;
  for (const auto& [name, value] : c.items()) {
    auto id = pattern_from_name(name);
    if (!id) throw std::invalid_argument("unknown pattern '" + name + "'");
    cv.set(*id, value.get<std::uint64_t>());
  }
  if (j.contains("edges")) cv.edge_count = j.at("edges").get<std::uint64_t>();
  return cv;
}

Json multiset_json(const WeightedMultiset& ms) {
  Json a = Json::array();
  for (const auto& w : ms.items()) a.push_back({{"value", to_string(w.value)}, {"mult", to_string(w.mult)}});
  return a;
}

namespace {

Json order_map(const std::map<int, Rational>& m) {
  Json j = Json::object();
  for (const auto& [l, v] : m) j[std::to_string(l)] = rational_json(v);
  return j;
}

std::map<int, Rational> order_map_from(const Json& j) {
  std::map<int, Rational> m;
  for (const auto& [k, v] : j.items()) m[std::stoi(k)] = rational_from_json(v);
  return m;
}

}  // namespace

Json params_json(const CoreKernelParams& p) {
  Json sigma = Json::array(), tau = Json::array();
  for (const auto& s : p.sigma) sigma.push_back(rational_json(s));
  for (const auto& row : p.tau) tau.push_back(order_map(row));
  return {{"k", p.k}, {"delta", rational_json(p.delta)}, {"m", p.m},
          {"sigma", sigma}, {"gamma", order_map(p.gamma)}, {"tau", tau}};
}

CoreKernelParams params_from_json(const Json& j) {
  CoreKernelParams p;
  p.k = j.at("k").get<int>();
  p.delta = rational_from_json(j.at("delta"));
  p.m = j.value("m", 0);
  if (j.contains("sigma"))
    for (const auto& s : j.at("sigma")) p.sigma.push_back(rational_from_json(s));
  if (j.contains("gamma")) p.gamma = order_map_from(j.at("gamma"));
  if (j.contains("tau"))
    for (const auto& row : j.at("tau")) p.tau.push_back(order_map_from(row));
  return p;
}

Json spec_json(const CoreKernelSpec& s) {
  Json halves = Json::array();
  for (int h = 0; h < s.halves(); ++h)
    halves.push_back({{"interval", h / 2 + 1}, {"half", h % 2 ? "-" : "+"}, {"omega", multiset_json(s.omega(h))}});
  return {{"requested", params_json(s.requested())},
          {"effective", params_json(s.params())},
          {"fallback", s.fallback()},
          {"gamma", rational_json(s.gamma())},
          {"intervals", s.intervals()},
          {"halves", halves}};
}

Json recipe_json(const WitnessRecipe& w) {
  Json z = Json::array();
  for (const auto& v : w.z) z.push_back(rational_json(v));
  Json j = params_json(w.params);
  j["rule"] = w.rule;
  j["target_degree"] = w.target_degree;
  j["z"] = z;
  j["shrink_steps"] = w.shrink_steps;
  return j;
}

Json report_json(const WitnessReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}});
  Json j{{"graph", r.graph},
         {"rule", r.rule},
         {"coefficients", order_map(r.coefficients)},
         {"checks", checks},
         {"verdict", r.certified() ? "certified" : "failed"}};
  if (r.recipe) j["recipe"] = recipe_json(*r.recipe);
  return j;
}

Json poly_json(const EpsPolynomial& p) {
  return {{"schema", kSchema}, {"p", rational_json(p.p)}, {"m", p.edges}, {"c", order_map(p.c)}};
}

Json kernel_json(const StepKernel& u) {
  Json rows = Json::array();
  for (const auto& row : u.matrix()) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(rational_json(v));
    rows.push_back(r);
  }
  return {{"grid", {{"n", u.n()}, {"matrix", rows}}}};
}

RankOneSum rank_one_from_json(const Json& j) {
  RankOneSum u;
  for (const auto& t : j.at("rank_one")) {
    std::vector<Rational> b, v;
    for (const auto& x : t.at("breakpoints")) b.push_back(rational_from_json(x));
    for (const auto& x : t.at("values")) v.push_back(rational_from_json(x));
    RankOneTerm term{rational_from_json(t.at("lambda")), StepFunction(b, v), BigInt(1)};
    if (t.contains("mult")) {
      const Json& m = t.at("mult");
      term.mult = m.is_number_integer() ? BigInt(std::to_string(m.get<long long>())) : BigInt(m.get<std::string>());
    }
    u.terms.push_back(std::move(term));
  }
  return u;
}

StepKernel to_step_kernel(const RankOneSum& u, int max_cells) {
  BigInt n = 1;
  for (const auto& t : u.terms)
    for (const auto& b : t.f.breakpoints()) mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), b.get_den_mpz_t());
  if (n > max_cells) throw std::invalid_argument("rank-one kernel needs a grid of " + n.get_str() + " cells");
  const int cells = static_cast<int>(n.get_si());
  std::vector<std::vector<Rational>> m(cells, std::vector<Rational>(cells, Rational(0)));
  for (const auto& t : u.terms) {
    auto f = t.f.on_grid(cells);
    Rational w = Rational(t.mult) * t.lambda;
    for (int a = 0; a < cells; ++a)
      for (int b = 0; b < cells; ++b) m[a][b] += w * f[a] * f[b];
  }
  return StepKernel(std::move(m));
}

StepKernel kernel_from_json(const Json& j, int max_cells) {
  if (j.contains("grid")) {
    const Json& g = j.at("grid");
    std::vector<std::vector<Rational>> m;
    for (const auto& row : g.at("matrix")) {
      std::vector<Rational> r;
      for (const auto& v : row) r.push_back(rational_from_json(v));
      m.push_back(std::move(r));
    }
    if (g.contains("n") && g.at("n").get<int>() != static_cast<int>(m.size()))
      throw std::invalid_argument("grid n does not match the matrix size");
    return StepKernel(std::move(m));
  }
  if (j.contains("rank_one")) return to_step_kernel(rank_one_from_json(j), max_cells);
  throw std::invalid_argument("kernel JSON needs a \"grid\" or \"rank_one\" member");
}

}  // namespace deckclass
