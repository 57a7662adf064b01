#include "sweep.hpp"

#include <set>

#include "deckclass/detail/deck_rules.hpp"

namespace sweep {

namespace {

struct Unassigned {
  PatternId id;
};

struct PartialCounts {
  const std::map<PatternId, std::uint64_t>* fixed;
  std::uint64_t count(PatternId id) const {
    auto it = fixed->find(id);
    if (it == fixed->end()) throw Unassigned{id};
    return it->second;
  }
};

const std::set<PatternId>& quadratic_inputs() {
  static const std::set<PatternId> ids = {PatternId::C3_P4_C3, PatternId::C5_O_C5, PatternId::C3_P2_C5,
                                          PatternId::C3_P6_C3, PatternId::C5_P2_C5, PatternId::C3_P4_C5,
                                          PatternId::C3_P2_C7, PatternId::C5_O_C7};
  return ids;
}

void walk(int deck, std::map<PatternId, std::uint64_t>& fixed, const std::function<void(const Leaf&)>& visit,
          std::size_t& leaves) {
  PatternId next;
  try {
    DeckResult r = deckclass::detail::cascade(PartialCounts{&fixed}, deck);
    ++leaves;
    visit(Leaf{fixed, std::move(r)});
    return;
  } catch (const Unassigned& u) {
    next = u.id;
  }
  for (std::uint64_t v : branch_values(next)) {
    fixed[next] = v;
    walk(deck, fixed, visit, leaves);
  }
  fixed.erase(next);
}

}  // namespace

const std::vector<std::uint64_t>& branch_values(PatternId id) {
  static const std::vector<std::uint64_t> binary = {0, 1};
  static const std::vector<std::uint64_t> wide = {0, 1, 2, 3};
  return quadratic_inputs().count(id) ? wide : binary;
}

std::size_t explore(int deck, const std::function<void(const Leaf&)>& visit) {
  std::map<PatternId, std::uint64_t> fixed = {{PatternId::P2, 1}};
  std::size_t leaves = 0;
  walk(deck, fixed, visit, leaves);
  return leaves;
}

namespace {

// inside[b] lists the catalogue patterns that are subgraphs of b.
const std::map<PatternId, std::vector<PatternId>>& inside() {
  static const auto table = [] {
    std::map<PatternId, std::vector<PatternId>> t;
    for (const auto& b : deckclass::catalogue()) {
      t[b.id];
      for (const auto& a : deckclass::catalogue())
        if (a.id != b.id && a.graph.size() <= b.graph.size() && deckclass::contains_subgraph(b.graph, a.graph))
          t[b.id].push_back(a.id);
    }
    return t;
  }();
  return table;
}

}  // namespace

bool contradictory(const Leaf& leaf) {
  for (const auto& [b, vb] : leaf.fixed) {
    if (vb == 0) continue;
    for (PatternId a : inside().at(b)) {
      auto it = leaf.fixed.find(a);
      if (it != leaf.fixed.end() && it->second == 0) return true;
    }
  }
  return false;
}

CountVector complete(const Leaf& leaf, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(1, 3);
  std::bernoulli_distribution absent(0.3);
  std::map<PatternId, std::uint64_t> value = leaf.fixed;
  std::set<PatternId> positive;
  for (const auto& [b, vb] : leaf.fixed)
    if (vb > 0)
      for (PatternId a : inside().at(b)) positive.insert(a);
  auto by_size = deckclass::catalogue();
  std::stable_sort(by_size.begin(), by_size.end(),
                   [](const auto& x, const auto& y) { return x.graph.size() < y.graph.size(); });
  for (const auto& info : by_size) {
    if (value.count(info.id)) continue;
    bool blocked = false;
    for (PatternId a : inside().at(info.id)) {
      auto it = value.find(a);
      blocked = blocked || (it != value.end() && it->second == 0);
    }
    if (blocked) value[info.id] = 0;
    else if (positive.count(info.id)) value[info.id] = d(rng);
    else value[info.id] = absent(rng) ? 0 : d(rng);
  }
  CountVector cv;
  for (const auto& [id, v] : value) cv.set(id, v);
  return cv;
}

}  // namespace sweep
