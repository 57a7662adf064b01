#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace deckclass {

using Edge = std::pair<int, int>;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Simple undirected graph on vertices 0..order-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);
  Graph(int order, const std::vector<Edge>& edges);

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  bool has_edge(int u, int v) const;

  int add_vertex();
  void add_edge(int u, int v);

  int min_degree() const;
  bool operator==(const Graph& other) const { return edges_ == other.edges_ && order() == other.order(); }

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<Edge> edges_;  // u < v, in insertion order
};

enum class GraphFormat { edgelist, graph6 };

Graph parse_edgelist(std::string_view text);
Graph parse_graph6(std::string_view line);
Graph parse_graph(std::string_view text, GraphFormat format);
// Several graphs, one graph6 string per non-empty line.
std::vector<Graph> parse_graph6_lines(std::string_view text);

std::string to_graph6(const Graph& g);
std::string to_edgelist(const Graph& g);

// Builders.
Graph cycle_graph(int length);
Graph path_graph(int edges);
Graph complete_graph(int order);
Graph petersen_graph();
Graph disjoint_union(const Graph& a, const Graph& b);
// Identify vertex va of a with vertex vb of b.
Graph glue_at_vertex(const Graph& a, int va, const Graph& b, int vb);
// Join va and vb by a fresh path with path_edges edges (0 reduces to gluing).
Graph join_by_path(const Graph& a, int va, int path_edges, const Graph& b, int vb);

// Drops isolated vertices and relabels the rest in increasing order.
Graph without_isolated(const Graph& g);
// Graph spanned by a subset of edges (indices into g.edges()), isolated vertices dropped.
Graph edge_subgraph(const Graph& g, const std::vector<int>& edge_indices);
std::vector<std::vector<int>> connected_components(const Graph& g);
Graph induced_on(const Graph& g, const std::vector<int>& vertices);

// Biconnected blocks as edge-index lists.
std::vector<std::vector<int>> blocks(const Graph& g);

}  // namespace deckclass
