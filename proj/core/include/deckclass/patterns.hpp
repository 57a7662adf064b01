#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deckclass/graph.hpp"

namespace deckclass {

// Named small graphs used by the deck conditions. U = disjoint union,
// O = one vertex identified, Pn = joined by an n-edge path.
enum class PatternId {
  P1, P2, P1_U_P1,
  C4, C6, C8, C10, C12,
  C3_U_C3, C3_O_C3,
  C3_U_C5, C3_O_C5, C3_P2_C3,
  C3_U_C7, C3_O_C7, C3_P2_C5, C3_P4_C3, C5_U_C5, C5_O_C5, C3_U_C3P1C3,
  C3_U_C9, C3_O_C9, C5_U_C7, C5_O_C7, C5_P2_C5, C3_P6_C3, C3_P4_C5, C3_P2_C7,
  C5_U_C3P1C3, C3_U_C3_U_C3_U_C3, C3_U_C3P3C3, C3_U_C3P1C5,
  // odd cycles, reported alongside for consistency checks
  C3, C5, C7, C9, C11,
};

struct PatternInfo {
  PatternId id;
  std::string name;  // e.g. "C3⊕P2⊕C3"
  Graph graph;
  bool auxiliary;    // odd cycles are not part of any deck condition
};

const std::vector<PatternInfo>& catalogue();
const PatternInfo& pattern_info(PatternId id);
const std::string& pattern_name(PatternId id);
std::optional<PatternId> pattern_from_name(std::string_view name);

// Subgraph copies of each catalogue pattern in a host graph.
class CountVector {
 public:
  CountVector() = default;
  CountVector(std::initializer_list<std::pair<const PatternId, std::uint64_t>> init) : counts_(init) {}

  std::uint64_t operator[](PatternId id) const {
    auto it = counts_.find(id);
    return it == counts_.end() ? 0 : it->second;
  }
  std::uint64_t count(PatternId id) const { return (*this)[id]; }
  void set(PatternId id, std::uint64_t value) { counts_[id] = value; }
  const std::map<PatternId, std::uint64_t>& entries() const { return counts_; }

  std::optional<std::uint64_t> edge_count;

 private:
  std::map<PatternId, std::uint64_t> counts_;
};

// Number of edge subsets of host spanning a graph isomorphic to pattern
// (isolated pattern vertices are ignored). Copies, not homomorphisms.
std::uint64_t count_subgraphs(const Graph& host, const Graph& pattern);

// Injective homomorphisms pattern -> host (edges to edges, non-induced).
std::uint64_t count_monomorphisms(const Graph& pattern, const Graph& host);
std::uint64_t automorphism_count(const Graph& g);
bool contains_subgraph(const Graph& host, const Graph& pattern);

CountVector count_vector(const Graph& g);

bool is_principal(const Graph& g);

// All principal graphs with the given number of edges, one per isomorphism
// class, in canonical labelling. Odd counts give the odd-cycle cacti only.
std::vector<Graph> enumerate_principal(int edge_count);

std::optional<int> shortest_even_cycle(const Graph& g);

// Every edge subset of g of the given size whose spanned graph has minimum
// degree at least two, grouped by isomorphism class (canonical graph, count).
std::vector<std::pair<Graph, std::uint64_t>> min_degree_two_subgraphs(const Graph& g, int edges);

// Every edge subset of the given size grouped by isomorphism class.
std::vector<std::pair<Graph, std::uint64_t>> all_subgraph_classes(const Graph& g, int edges);

}  // namespace deckclass
