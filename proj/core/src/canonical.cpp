#include "deckclass/canonical.hpp"

#include <algorithm>
#include <map>

namespace deckclass {

namespace {

// Ordered partition refined to equitability. cells[i] lists vertices; the
// order of cells is label-independent.
using Partition = std::vector<std::vector<int>>;

Partition refine(const Graph& g, Partition p) {
  int n = g.order();
  std::vector<int> cell_of(n);
  while (true) {
    for (std::size_t c = 0; c < p.size(); ++c)
      for (int v : p[c]) cell_of[v] = static_cast<int>(c);
    Partition next;
    bool split = false;
    for (const auto& cell : p) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<int>, int>> sig;
      for (int v : cell) {
        std::vector<int> counts(p.size(), 0);
        for (int w : g.neighbors(v)) ++counts[cell_of[w]];
        sig.emplace_back(std::move(counts), v);
      }
      std::sort(sig.begin(), sig.end());
      std::size_t start = 0;
      for (std::size_t i = 1; i <= sig.size(); ++i) {
        if (i == sig.size() || sig[i].first != sig[start].first) {
          std::vector<int> part;
          for (std::size_t j = start; j < i; ++j) part.push_back(sig[j].second);
          next.push_back(std::move(part));
          start = i;
        }
      }
      if (sig.front().first != sig.back().first) split = true;
    }
    p = std::move(next);
    if (!split) return p;
  }
}

std::string code_for(const Graph& g, const Partition& p) {
  int n = g.order();
  std::vector<int> pos(n);
  for (std::size_t i = 0; i < p.size(); ++i) pos[p[i][0]] = static_cast<int>(i);
  std::string bits(static_cast<std::size_t>(n) * (n - 1) / 2, '0');
  for (auto [u, v] : g.edges()) {
    int a = std::min(pos[u], pos[v]), b = std::max(pos[u], pos[v]);
    bits[static_cast<std::size_t>(b) * (b - 1) / 2 + a] = '1';
  }
  return bits;
}

void search(const Graph& g, const Partition& p, std::string& best, Partition& best_p) {
  auto target = std::find_if(p.begin(), p.end(), [](const auto& c) { return c.size() > 1; });
  if (target == p.end()) {
    std::string code = code_for(g, p);
    if (best.empty() || code < best) {
      best = code;
      best_p = p;
    }
    return;
  }
  std::size_t idx = static_cast<std::size_t>(target - p.begin());
  for (int v : *target) {
    Partition q;
    q.reserve(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i != idx) {
        q.push_back(p[i]);
        continue;
      }
      q.push_back({v});
      std::vector<int> rest;
      for (int w : p[i])
        if (w != v) rest.push_back(w);
      q.push_back(std::move(rest));
    }
    search(g, refine(g, std::move(q)), best, best_p);
  }
}

// Canonical order of a connected graph: returns (code, vertex order).
std::pair<std::string, std::vector<int>> canonical_connected(const Graph& g) {
  int n = g.order();
  if (n == 1) return {"", {0}};
  std::map<int, std::vector<int>> by_degree;
  for (int v = 0; v < n; ++v) by_degree[g.degree(v)].push_back(v);
  Partition p;
  for (auto& [d, vs] : by_degree) p.push_back(vs);
  std::string best;
  Partition best_p;
  search(g, refine(g, p), best, best_p);
  std::vector<int> order;
  for (const auto& c : best_p) order.push_back(c[0]);
  return {best, order};
}

struct ComponentCode {
  std::string key;  // "n:bits"
  std::vector<int> order;  // original vertex ids in canonical order
};

std::vector<ComponentCode> component_codes(const Graph& g) {
  std::vector<ComponentCode> out;
  for (const auto& comp : connected_components(g)) {
    Graph sub = induced_on(g, comp);
    auto [bits, ord] = canonical_connected(sub);
    ComponentCode cc;
    cc.key = std::to_string(comp.size()) + ":" + bits;
    for (int v : ord) cc.order.push_back(comp[v]);
    out.push_back(std::move(cc));
  }
  std::sort(out.begin(), out.end(), [](const ComponentCode& a, const ComponentCode& b) {
    if (a.order.size() != b.order.size()) return a.order.size() > b.order.size();
    return a.key < b.key;
  });
  return out;
}

}  // namespace

std::string canonical_form(const Graph& g) {
  std::string out;
  for (const auto& cc : component_codes(g)) {
    if (!out.empty()) out += '|';
    out += cc.key;
  }
  return out;
}

Graph canonical_graph(const Graph& g) {
  std::vector<int> label(g.order());
  int next = 0;
  for (const auto& cc : component_codes(g))
    for (int v : cc.order) label[v] = next++;
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(std::min(label[u], label[v]), std::max(label[u], label[v]));
  std::sort(edges.begin(), edges.end());
  return Graph(g.order(), edges);
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace deckclass
