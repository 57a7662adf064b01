#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deckclass/graph.hpp"
#include "deckclass/patterns.hpp"

namespace deckclass {

enum class DeckClass { I, II, III };
std::string to_string(DeckClass c);

class OutOfScopeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Condition {
  std::string name;   // e.g. "s(C3⊕C5)>0"
  std::string value;  // "true"/"false", or "<", "=", ">" for comparisons
};

struct DecisionStep {
  int deck = 0;
  std::string rule;
  std::vector<Condition> conditions;
  // Class decided at this level; nullopt means Class III handed on to the
  // next deck size.
  std::optional<DeckClass> outcome;
};

struct DecisionTrace {
  std::vector<DecisionStep> steps;
  std::optional<int> table_row;  // row of the 8-deck table, when reached
  std::vector<std::string> notes;

  const DecisionStep& final_step() const { return steps.back(); }
  DeckClass result() const { return *steps.back().outcome; }
};

struct DeckResult {
  DeckClass deck_class;
  DecisionTrace trace;
};

DeckResult classify_deck4(const CountVector& cv);
DeckResult classify_deck6(const CountVector& cv);
DeckResult classify_deck8(const CountVector& cv);
DeckResult classify_deck10(const CountVector& cv);
DeckResult classify_deck12(const CountVector& cv);
// Cascade up to the given even deck size (2..12). Size 2 is the balanced-kernel
// level used for graphs with two or three edges.
DeckResult classify_deck(const CountVector& cv, int deck);

enum class VerdictStatus { locally_common, not_locally_common, undecided_class_iii, trivially_locally_common };
std::string to_string(VerdictStatus s);

struct GraphVerdict {
  VerdictStatus status;
  std::optional<DeckClass> deck_class;
  int depth = 0;
  int edges = 0;
  DecisionTrace trace;
};

GraphVerdict classify_graph(const Graph& g);
GraphVerdict classify_counts(const CountVector& cv, int edges);

}  // namespace deckclass
