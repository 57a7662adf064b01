#include "deckclass/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace deckclass {

Graph::Graph(int order) {
  if (order < 0) throw std::invalid_argument("negative graph order");
  adj_.resize(order);
}

Graph::Graph(int order, const std::vector<Edge>& edges) : Graph(order) {
  for (auto [u, v] : edges) add_edge(u, v);
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= order() || v >= order()) return false;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  int other = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::find(a.begin(), a.end(), other) != a.end();
}

int Graph::add_vertex() {
  adj_.emplace_back();
  return order() - 1;
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  if (u < 0 || v < 0 || u >= order() || v >= order())
    throw std::out_of_range("edge endpoint out of range");
  if (has_edge(u, v))
    throw std::invalid_argument("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  edges_.emplace_back(std::min(u, v), std::max(u, v));
}

int Graph::min_degree() const {
  int best = order() ? degree(0) : 0;
  for (int v = 1; v < order(); ++v) best = std::min(best, degree(v));
  return best;
}

Graph parse_edgelist(std::string_view text) {
  std::vector<Edge> edges;
  int order = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() != 2)
      throw ParseError("edge list line " + std::to_string(line_no) + ": expected two vertex labels");
    int ends[2];
    for (int i = 0; i < 2; ++i) {
      const std::string& t = tok[i];
      if (t.empty() || t.size() > 9 || !std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw ParseError("edge list line " + std::to_string(line_no) + ": bad vertex label '" + t + "'");
      ends[i] = std::stoi(t);
    }
    if (ends[0] == ends[1])
      throw ParseError("edge list line " + std::to_string(line_no) + ": loop at vertex " + tok[0]);
    order = std::max({order, ends[0] + 1, ends[1] + 1});
    edges.emplace_back(ends[0], ends[1]);
  }
  Graph g(order);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (g.has_edge(u, v))
      throw ParseError("edge list: repeated edge " + std::to_string(u) + " " + std::to_string(v));
    g.add_edge(u, v);
  }
  return g;
}

Graph parse_graph6(std::string_view line) {
  std::string_view s = line;
  if (s.substr(0, 10) == ">>graph6<<") s.remove_prefix(10);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  auto byte_at = [&](std::size_t i) -> int {
    if (i >= s.size()) throw ParseError("graph6: truncated input at offset " + std::to_string(i));
    int c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw ParseError("graph6: invalid character at offset " + std::to_string(i));
    return c - 63;
  };
  if (s.empty()) throw ParseError("graph6: empty input");
  std::size_t pos = 0;
  long n = 0;
  if (static_cast<unsigned char>(s[0]) != 126) {
    n = byte_at(0);
    pos = 1;
  } else if (s.size() > 1 && static_cast<unsigned char>(s[1]) != 126) {
    for (int i = 1; i <= 3; ++i) n = (n << 6) | byte_at(i);
    pos = 4;
  } else {
    for (int i = 2; i <= 7; ++i) n = (n << 6) | byte_at(i);
    pos = 8;
  }
  if (n > 100000) throw ParseError("graph6: order too large");
  std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t need = (bits + 5) / 6;
  if (s.size() - pos != need)
    throw ParseError("graph6: expected " + std::to_string(need) + " data bytes, found " + std::to_string(s.size() - pos));
  Graph g(static_cast<int>(n));
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      int b = byte_at(pos + k / 6);
      if ((b >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  for (; k < need * 6; ++k)
    if ((byte_at(pos + k / 6) >> (5 - k % 6)) & 1) throw ParseError("graph6: non-zero padding bits");
  return g;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::edgelist) return parse_edgelist(text);
  std::string_view s = text;
  while (!s.empty() && (s.front() == '\n' || s.front() == ' ')) s.remove_prefix(1);
  auto nl = s.find('\n');
  std::string_view first = s.substr(0, nl);
  if (nl != std::string_view::npos) {
    std::string_view rest = s.substr(nl);
    if (rest.find_first_not_of(" \r\n") != std::string_view::npos)
      throw ParseError("graph6: more than one graph in input");
  }
  return parse_graph6(first);
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \r") == std::string::npos) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::string to_graph6(const Graph& g) {
  long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int sh = 12; sh >= 0; sh -= 6) out.push_back(static_cast<char>(((n >> sh) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int sh = 30; sh >= 0; sh -= 6) out.push_back(static_cast<char>(((n >> sh) & 63) + 63));
  }
  int acc = 0, used = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = used = 0;
      }
    }
  if (used) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

std::string to_edgelist(const Graph& g) {
  std::string out;
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph cycle_graph(int length) {
  if (length < 3) throw std::invalid_argument("cycle length must be at least 3");
  Graph g(length);
  for (int i = 0; i < length; ++i) g.add_edge(i, (i + 1) % length);
  return g;
}

Graph path_graph(int edges) {
  if (edges < 0) throw std::invalid_argument("negative path length");
  Graph g(edges + 1);
  for (int i = 0; i < edges; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete_graph(int order) {
  Graph g(order);
  for (int j = 1; j < order; ++j)
    for (int i = 0; i < j; ++i) g.add_edge(i, j);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(u + a.order(), v + a.order());
  return g;
}

Graph glue_at_vertex(const Graph& a, int va, const Graph& b, int vb) {
  return join_by_path(a, va, 0, b, vb);
}

Graph join_by_path(const Graph& a, int va, int path_edges, const Graph& b, int vb) {
  if (va < 0 || va >= a.order() || vb < 0 || vb >= b.order())
    throw std::out_of_range("attachment vertex out of range");
  Graph g(a.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  int prev = va;
  for (int i = 0; i + 1 < path_edges; ++i) {
    int w = g.add_vertex();
    g.add_edge(prev, w);
    prev = w;
  }
  std::vector<int> map(b.order(), -1);
  if (path_edges == 0) map[vb] = va;
  for (int v = 0; v < b.order(); ++v)
    if (map[v] < 0) map[v] = g.add_vertex();
  if (path_edges > 0) g.add_edge(prev, map[vb]);
  for (auto [u, v] : b.edges()) g.add_edge(map[u], map[v]);
  return g;
}

Graph without_isolated(const Graph& g) {
  std::vector<int> label(g.order(), -1);
  int next = 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) > 0) label[v] = next++;
  Graph out(next);
  for (auto [u, v] : g.edges()) out.add_edge(label[u], label[v]);
  return out;
}

Graph edge_subgraph(const Graph& g, const std::vector<int>& edge_indices) {
  std::vector<int> label(g.order(), -1);
  int next = 0;
  std::vector<int> idx = edge_indices;
  for (int e : idx) {
    auto [u, v] = g.edges().at(e);
    if (label[u] < 0) label[u] = next++;
    if (label[v] < 0) label[v] = next++;
  }
  Graph out(next);
  for (int e : idx) {
    auto [u, v] = g.edges()[e];
    out.add_edge(label[u], label[v]);
  }
  return out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<int> seen(g.order(), 0);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (int w : g.neighbors(comp[i]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

Graph induced_on(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> label(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) label[vertices[i]] = static_cast<int>(i);
  Graph out(static_cast<int>(vertices.size()));
  for (auto [u, v] : g.edges())
    if (label[u] >= 0 && label[v] >= 0) out.add_edge(label[u], label[v]);
  return out;
}

std::vector<std::vector<int>> blocks(const Graph& g) {
  // Hopcroft-Tarjan with an edge stack.
  int n = g.order();
  std::vector<std::vector<std::pair<int, int>>> inc(n);  // (neighbor, edge index)
  for (std::size_t e = 0; e < g.size(); ++e) {
    auto [u, v] = g.edges()[e];
    inc[u].emplace_back(v, static_cast<int>(e));
    inc[v].emplace_back(u, static_cast<int>(e));
  }
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<int> stack;
  std::vector<std::vector<int>> out;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int parent_edge) {
    disc[v] = low[v] = timer++;
    for (auto [w, e] : inc[v]) {
      if (e == parent_edge) continue;
      if (disc[w] < 0) {
        stack.push_back(e);
        dfs(w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          std::vector<int> blk;
          while (true) {
            int top = stack.back();
            stack.pop_back();
            blk.push_back(top);
            if (top == e) break;
          }
          std::sort(blk.begin(), blk.end());
          out.push_back(std::move(blk));
        }
      } else if (disc[w] < disc[v]) {
        stack.push_back(e);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (int v = 0; v < n; ++v)
    if (disc[v] < 0) dfs(v, -1);
  return out;
}

}  // namespace deckclass
