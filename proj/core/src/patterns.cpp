#include "deckclass/patterns.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "deckclass/canonical.hpp"

namespace deckclass {

namespace {

Graph C(int n) { return cycle_graph(n); }
Graph U(const Graph& a, const Graph& b) { return disjoint_union(a, b); }
Graph O(const Graph& a, const Graph& b) { return glue_at_vertex(a, 0, b, 0); }
Graph J(const Graph& a, int n, const Graph& b) { return join_by_path(a, 0, n, b, 0); }

std::vector<PatternInfo> build_catalogue() {
  using P = PatternId;
  std::vector<PatternInfo> c = {
      {P::P1, "P1", path_graph(1), false},
      {P::P2, "P2", path_graph(2), false},
      {P::P1_U_P1, "P1∪P1", U(path_graph(1), path_graph(1)), false},
      {P::C4, "C4", C(4), false},
      {P::C6, "C6", C(6), false},
      {P::C8, "C8", C(8), false},
      {P::C10, "C10", C(10), false},
      {P::C12, "C12", C(12), false},
      {P::C3_U_C3, "C3∪C3", U(C(3), C(3)), false},
      {P::C3_O_C3, "C3⊕C3", O(C(3), C(3)), false},
      {P::C3_U_C5, "C3∪C5", U(C(3), C(5)), false},
      {P::C3_O_C5, "C3⊕C5", O(C(3), C(5)), false},
      {P::C3_P2_C3, "C3⊕P2⊕C3", J(C(3), 2, C(3)), false},
      {P::C3_U_C7, "C3∪C7", U(C(3), C(7)), false},
      {P::C3_O_C7, "C3⊕C7", O(C(3), C(7)), false},
      {P::C3_P2_C5, "C3⊕P2⊕C5", J(C(3), 2, C(5)), false},
      {P::C3_P4_C3, "C3⊕P4⊕C3", J(C(3), 4, C(3)), false},
      {P::C5_U_C5, "C5∪C5", U(C(5), C(5)), false},
      {P::C5_O_C5, "C5⊕C5", O(C(5), C(5)), false},
      {P::C3_U_C3P1C3, "C3∪(C3⊕P1⊕C3)", U(C(3), J(C(3), 1, C(3))), false},
      {P::C3_U_C9, "C3∪C9", U(C(3), C(9)), false},
      {P::C3_O_C9, "C3⊕C9", O(C(3), C(9)), false},
      {P::C5_U_C7, "C5∪C7", U(C(5), C(7)), false},
      {P::C5_O_C7, "C5⊕C7", O(C(5), C(7)), false},
      {P::C5_P2_C5, "C5⊕P2⊕C5", J(C(5), 2, C(5)), false},
      {P::C3_P6_C3, "C3⊕P6⊕C3", J(C(3), 6, C(3)), false},
      {P::C3_P4_C5, "C3⊕P4⊕C5", J(C(3), 4, C(5)), false},
      {P::C3_P2_C7, "C3⊕P2⊕C7", J(C(3), 2, C(7)), false},
      {P::C5_U_C3P1C3, "C5∪(C3⊕P1⊕C3)", U(C(5), J(C(3), 1, C(3))), false},
      {P::C3_U_C3_U_C3_U_C3, "C3∪C3∪C3∪C3", U(U(C(3), C(3)), U(C(3), C(3))), false},
      {P::C3_U_C3P3C3, "C3∪(C3⊕P3⊕C3)", U(C(3), J(C(3), 3, C(3))), false},
      {P::C3_U_C3P1C5, "C3∪(C3⊕P1⊕C5)", U(C(3), J(C(3), 1, C(5))), false},
      {P::C3, "C3", C(3), true},
      {P::C5, "C5", C(5), true},
      {P::C7, "C7", C(7), true},
      {P::C9, "C9", C(9), true},
      {P::C11, "C11", C(11), true},
  };
  return c;
}

// Backtracking monomorphism search from pattern (no isolated vertices
// required) into host. visit(image) returns false to stop early.
class Embedder {
 public:
  Embedder(const Graph& pattern, const Graph& host) : pat_(pattern), host_(host) {
    int hn = host.order();
    hadj_.assign(static_cast<std::size_t>(hn) * hn, 0);
    for (auto [u, v] : host.edges()) hadj_[u * hn + v] = hadj_[v * hn + u] = 1;
    int pn = pattern.order();
    std::vector<int> placed(pn, 0), seen_nbrs(pn, 0);
    for (int step = 0; step < pn; ++step) {
      int best = -1;
      for (int v = 0; v < pn; ++v) {
        if (placed[v]) continue;
        if (best < 0 || seen_nbrs[v] > seen_nbrs[best] ||
            (seen_nbrs[v] == seen_nbrs[best] && pattern.degree(v) > pattern.degree(best)))
          best = v;
      }
      placed[best] = 1;
      order_.push_back(best);
      for (int w : pattern.neighbors(best)) ++seen_nbrs[w];
    }
    std::vector<int> pos(pn);
    for (int i = 0; i < pn; ++i) pos[order_[i]] = i;
    back_.resize(pn);
    for (int i = 0; i < pn; ++i)
      for (int w : pattern.neighbors(order_[i]))
        if (pos[w] < i) back_[i].push_back(w);
  }

  template <class Visit>
  void run(Visit&& visit) {
    image_.assign(pat_.order(), -1);
    used_.assign(host_.order(), 0);
    stop_ = false;
    if (pat_.order() == 0) {
      visit(image_);
      return;
    }
    extend(0, visit);
  }

 private:
  template <class Visit>
  void extend(int i, Visit& visit) {
    if (stop_) return;
    if (i == pat_.order()) {
      if (!visit(image_)) stop_ = true;
      return;
    }
    int v = order_[i];
    int hn = host_.order();
    auto try_vertex = [&](int h) {
      if (used_[h] || host_.degree(h) < pat_.degree(v)) return;
      for (int w : back_[i])
        if (!hadj_[image_[w] * hn + h]) return;
      image_[v] = h;
      used_[h] = 1;
      extend(i + 1, visit);
      used_[h] = 0;
      image_[v] = -1;
    };
    if (!back_[i].empty()) {
      for (int h : host_.neighbors(image_[back_[i][0]])) {
        try_vertex(h);
        if (stop_) return;
      }
    } else {
      for (int h = 0; h < hn; ++h) {
        try_vertex(h);
        if (stop_) return;
      }
    }
  }

  const Graph& pat_;
  const Graph& host_;
  std::vector<char> hadj_;
  std::vector<int> order_;
  std::vector<std::vector<int>> back_;
  std::vector<int> image_;
  std::vector<char> used_;
  bool stop_ = false;
};

using Bits = std::vector<std::uint64_t>;

bool disjoint(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & b[i]) return false;
  return true;
}

// Vertex sets of the distinct copies of a connected pattern.
std::vector<Bits> copy_vertex_sets(const Graph& host, const Graph& comp) {
  int hn = host.order();
  std::size_t words = static_cast<std::size_t>(hn + 63) / 64;
  std::vector<int> edge_id(static_cast<std::size_t>(hn) * hn, -1);
  for (std::size_t e = 0; e < host.size(); ++e) {
    auto [u, v] = host.edges()[e];
    edge_id[u * hn + v] = edge_id[v * hn + u] = static_cast<int>(e);
  }
  std::set<std::vector<int>> seen;
  std::vector<Bits> out;
  Embedder emb(comp, host);
  emb.run([&](const std::vector<int>& img) {
    std::vector<int> es;
    for (auto [u, v] : comp.edges()) es.push_back(edge_id[img[u] * hn + img[v]]);
    std::sort(es.begin(), es.end());
    if (seen.insert(es).second) {
      Bits b(words, 0);
      for (int h : img) b[h / 64] |= std::uint64_t{1} << (h % 64);
      out.push_back(std::move(b));
    }
    return true;
  });
  return out;
}

}  // namespace

const std::vector<PatternInfo>& catalogue() {
  static const std::vector<PatternInfo> c = build_catalogue();
  return c;
}

const PatternInfo& pattern_info(PatternId id) {
  for (const auto& p : catalogue())
    if (p.id == id) return p;
  throw std::out_of_range("unknown pattern id");
}

const std::string& pattern_name(PatternId id) { return pattern_info(id).name; }

std::optional<PatternId> pattern_from_name(std::string_view name) {
  for (const auto& p : catalogue())
    if (p.name == name) return p.id;
  return std::nullopt;
}

std::uint64_t count_monomorphisms(const Graph& pattern, const Graph& host) {
  std::uint64_t n = 0;
  Embedder emb(pattern, host);
  emb.run([&](const std::vector<int>&) {
    ++n;
    return true;
  });
  return n;
}

std::uint64_t automorphism_count(const Graph& g) { return count_monomorphisms(g, g); }

bool contains_subgraph(const Graph& host, const Graph& pattern) {
  Graph p = without_isolated(pattern);
  bool found = false;
  Embedder emb(p, host);
  emb.run([&](const std::vector<int>&) {
    found = true;
    return false;
  });
  return found;
}

std::uint64_t count_subgraphs(const Graph& host, const Graph& pattern) {
  Graph p = without_isolated(pattern);
  if (p.size() == 0) throw std::invalid_argument("count_subgraphs: pattern has no edges");
  if (p.size() > host.size()) return 0;
  auto comps = connected_components(p);
  if (comps.size() == 1) return count_monomorphisms(p, host) / automorphism_count(p);

  // Group identical components, list copies of each, then choose
  // vertex-disjoint selections (increasing indices within a group).
  std::vector<std::pair<std::string, Graph>> parts;
  for (const auto& c : comps) {
    Graph sub = induced_on(p, c);
    parts.emplace_back(canonical_form(sub), sub);
  }
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  struct Group {
    std::vector<Bits> copies;
    int need;
  };
  std::vector<Group> groups;
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j].first == parts[i].first) ++j;
    groups.push_back({copy_vertex_sets(host, parts[i].second), static_cast<int>(j - i)});
    i = j;
  }
  std::size_t words = static_cast<std::size_t>(host.order() + 63) / 64;
  std::uint64_t total = 0;
  std::function<void(std::size_t, int, std::size_t, Bits&)> rec = [&](std::size_t g, int left, std::size_t from,
                                                                     Bits& used) {
    if (g == groups.size()) {
      ++total;
      return;
    }
    if (left == 0) {
      if (g + 1 < groups.size())
        rec(g + 1, groups[g + 1].need, 0, used);
      else
        ++total;
      return;
    }
    const auto& cs = groups[g].copies;
    for (std::size_t i = from; i < cs.size(); ++i) {
      if (!disjoint(cs[i], used)) continue;
      for (std::size_t w = 0; w < words; ++w) used[w] |= cs[i][w];
      rec(g, left - 1, i + 1, used);
      for (std::size_t w = 0; w < words; ++w) used[w] &= ~cs[i][w];
    }
  };
  Bits used(words, 0);
  rec(0, groups[0].need, 0, used);
  return total;
}

CountVector count_vector(const Graph& g) {
  CountVector cv;
  for (const auto& p : catalogue()) cv.set(p.id, count_subgraphs(g, p.graph));
  cv.edge_count = g.size();
  return cv;
}

bool is_principal(const Graph& g) {
  if (g.order() == 0 || g.size() == 0) return false;
  if (g.min_degree() < 2) return false;
  auto comps = connected_components(g);
  bool all_deg2 = true;
  for (int v = 0; v < g.order(); ++v) all_deg2 = all_deg2 && g.degree(v) == 2;
  if (comps.size() == 1 && all_deg2 && g.size() % 2 == 0) return true;  // even cycle
  for (const auto& blk : blocks(g)) {
    if (blk.size() == 1) continue;
    std::set<int> vs;
    for (int e : blk) {
      vs.insert(g.edges()[e].first);
      vs.insert(g.edges()[e].second);
    }
    bool is_cycle = vs.size() == blk.size();
    if (!is_cycle || blk.size() % 2 == 0) return false;
  }
  return true;
}

std::vector<Graph> enumerate_principal(int edge_count) {
  if (edge_count < 1) throw std::invalid_argument("enumerate_principal: edge count must be positive");
  // Connected min-degree-two graphs whose blocks are odd cycles or edges,
  // grown by hanging an odd cycle off an existing vertex through a path.
  std::vector<std::map<std::string, Graph>> conn(edge_count + 1);
  for (int j = 3; j <= edge_count; j += 2) {
    Graph c = cycle_graph(j);
    conn[j].emplace(canonical_form(c), canonical_graph(c));
  }
  for (int e = 3; e <= edge_count; ++e) {
    for (const auto& [code, g] : conn[e]) {
      for (int v = 0; v < g.order(); ++v)
        for (int j = 3; e + j <= edge_count; j += 2)
          for (int path = 0; e + j + path <= edge_count; ++path) {
            Graph h = join_by_path(g, v, path, cycle_graph(j), 0);
            conn[h.size()].emplace(canonical_form(h), canonical_graph(h));
          }
    }
  }
  std::map<std::string, Graph> out;
  if (edge_count % 2 == 0 && edge_count >= 4) {
    Graph c = cycle_graph(edge_count);
    out.emplace(canonical_form(c), canonical_graph(c));
  }
  // Multisets of components: choose components in non-increasing code order.
  std::vector<std::pair<std::string, Graph>> pool;
  for (int e = 3; e <= edge_count; ++e)
    for (const auto& kv : conn[e]) pool.push_back(kv);
  std::function<void(std::size_t, int, const Graph&)> rec = [&](std::size_t from, int left, const Graph& acc) {
    if (left == 0) {
      out.emplace(canonical_form(acc), canonical_graph(acc));
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      int e = static_cast<int>(pool[i].second.size());
      if (e > left) continue;
      rec(i, left - e, disjoint_union(acc, pool[i].second));
    }
  };
  rec(0, edge_count, Graph());
  std::vector<Graph> result;
  for (auto& kv : out) result.push_back(std::move(kv.second));
  return result;
}

std::optional<int> shortest_even_cycle(const Graph& g) {
  for (int k = 4; k <= g.order(); k += 2)
    if (contains_subgraph(g, cycle_graph(k))) return k;
  return std::nullopt;
}

namespace {

std::vector<std::pair<Graph, std::uint64_t>> finish_classes(std::map<std::string, std::pair<Graph, std::uint64_t>>& m) {
  std::vector<std::pair<Graph, std::uint64_t>> out;
  for (auto& kv : m) out.push_back(std::move(kv.second));
  return out;
}

}  // namespace

std::vector<std::pair<Graph, std::uint64_t>> min_degree_two_subgraphs(const Graph& g, int edges) {
  int n = g.order();
  int total = static_cast<int>(g.size());
  std::map<std::string, std::pair<Graph, std::uint64_t>> classes;
  if (edges <= 0 || edges > total) return {};
  std::vector<int> deg(n, 0), remaining(n, 0);
  for (auto [u, v] : g.edges()) {
    ++remaining[u];
    ++remaining[v];
  }
  std::vector<int> chosen;
  auto stuck = [&](int v) { return deg[v] == 1 && remaining[v] == 0; };
  std::function<void(int)> rec = [&](int e) {
    if (static_cast<int>(chosen.size()) == edges) {
      for (int v = 0; v < n; ++v)
        if (deg[v] == 1) return;
      Graph h = edge_subgraph(g, chosen);
      std::string key = canonical_form(h);
      auto it = classes.find(key);
      if (it == classes.end())
        classes.emplace(key, std::make_pair(canonical_graph(h), std::uint64_t{1}));
      else
        ++it->second.second;
      return;
    }
    if (e == total || static_cast<int>(chosen.size()) + (total - e) < edges) return;
    auto [u, v] = g.edges()[e];
    --remaining[u];
    --remaining[v];
    // include
    ++deg[u];
    ++deg[v];
    chosen.push_back(e);
    if (!stuck(u) && !stuck(v)) rec(e + 1);
    chosen.pop_back();
    --deg[u];
    --deg[v];
    // exclude
    if (!stuck(u) && !stuck(v)) rec(e + 1);
    ++remaining[u];
    ++remaining[v];
  };
  rec(0);
  return finish_classes(classes);
}

std::vector<std::pair<Graph, std::uint64_t>> all_subgraph_classes(const Graph& g, int edges) {
  int total = static_cast<int>(g.size());
  std::map<std::string, std::pair<Graph, std::uint64_t>> classes;
  if (edges < 0 || edges > total) return {};
  std::vector<int> pick(edges);
  for (int i = 0; i < edges; ++i) pick[i] = i;
  while (true) {
    Graph h = edge_subgraph(g, pick);
    std::string key = canonical_form(h);
    auto it = classes.find(key);
    if (it == classes.end())
      classes.emplace(key, std::make_pair(canonical_graph(h), std::uint64_t{1}));
    else
      ++it->second.second;
    int i = edges - 1;
    while (i >= 0 && pick[i] == total - edges + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < edges; ++j) pick[j] = pick[j - 1] + 1;
  }
  return finish_classes(classes);
}

}  // namespace deckclass
