#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "deckclass/classifier.hpp"
#include "deckclass/core_kernel.hpp"
#include "deckclass/kernel.hpp"
#include "deckclass/witness.hpp"

namespace deckclass {

struct Check {
  std::string name;
  bool pass;
};

struct WitnessReport {
  std::string graph;
  std::string rule;
  std::optional<WitnessRecipe> recipe;
  std::map<int, Rational> coefficients;
  std::vector<Check> checks;

  bool certified() const;
  void add(std::string name, bool pass) { checks.push_back({std::move(name), pass}); }
};

// Witness for a not_locally_common graph, with coefficients taken over its
// minimum-degree-two subgraph classes.
WitnessReport verify_class2(const Graph& g, int max_shrink = 40);
// Null witness for a graph whose cascade stops in Class III.
WitnessReport verify_class3_null(const Graph& g);

// Both checks from a count vector alone: coefficients combine the counts of
// the catalogue patterns with their exact densities. A principal graph outside
// the catalogue may have non-zero density only if it contains a catalogue
// pattern of count zero.
WitnessReport verify_class2_counts(const CountVector& cv, const DecisionTrace& trace, int max_shrink = 40);
WitnessReport verify_class3_null_counts(const CountVector& cv, int depth);

// Symbolic closed forms against the materialized grid kernel.
WitnessReport verify_core_identities(const CoreKernelSpec& spec, int max_cells = 512, int max_path = 4);

WitnessReport verify_taylor(const Graph& g, const StepKernel& u, int trials, std::uint64_t seed = 1);

}  // namespace deckclass
