#pragma once

#include <string>
#include <vector>

#include "deckclass/graph.hpp"

namespace deckclass {

// Certificate that is equal for two graphs iff they are isomorphic.
// Components are labelled separately and their codes sorted.
std::string canonical_form(const Graph& g);

// Canonical relabelling of g as a graph (same certificate, fixed labels).
Graph canonical_graph(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace deckclass
