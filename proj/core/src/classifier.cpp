#include "deckclass/classifier.hpp"

#include <algorithm>

#include "deckclass/detail/deck_rules.hpp"

namespace deckclass {

std::string to_string(DeckClass c) {
  switch (c) {
    case DeckClass::I: return "I";
    case DeckClass::II: return "II";
    case DeckClass::III: return "III";
  }
  return "?";
}

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::locally_common: return "locally_common";
    case VerdictStatus::not_locally_common: return "not_locally_common";
    case VerdictStatus::undecided_class_iii: return "undecided_class_iii";
    case VerdictStatus::trivially_locally_common: return "trivially_locally_common";
  }
  return "?";
}

DeckResult classify_deck(const CountVector& cv, int deck) { return detail::cascade(cv, deck); }
DeckResult classify_deck4(const CountVector& cv) { return classify_deck(cv, 4); }
DeckResult classify_deck6(const CountVector& cv) { return classify_deck(cv, 6); }
DeckResult classify_deck8(const CountVector& cv) { return classify_deck(cv, 8); }
DeckResult classify_deck10(const CountVector& cv) { return classify_deck(cv, 10); }
DeckResult classify_deck12(const CountVector& cv) { return classify_deck(cv, 12); }

GraphVerdict classify_counts(const CountVector& cv, int edges) {
  GraphVerdict v;
  v.edges = edges;
  if (edges <= 1 || cv.count(PatternId::P2) == 0) {
    v.status = VerdictStatus::trivially_locally_common;
    v.trace.notes.push_back(
        "outside the deck rules: every subgraph is a matching, so each coefficient is a non-negative multiple of an even "
        "power of the edge density of U");
    return v;
  }
  int depth = std::min(edges, 12);
  depth -= depth % 2;
  DeckResult r = classify_deck(cv, depth);
  v.depth = depth;
  v.deck_class = r.deck_class;
  v.trace = std::move(r.trace);
  switch (r.deck_class) {
    case DeckClass::I: v.status = VerdictStatus::locally_common; break;
    case DeckClass::II: v.status = VerdictStatus::not_locally_common; break;
    case DeckClass::III:
      if (depth >= edges - 1) {
        v.status = VerdictStatus::locally_common;
        v.trace.notes.push_back("Class III at depth " + std::to_string(depth) + " with " + std::to_string(edges) +
                                " edges: remaining coefficients are non-negative");
      } else {
        v.status = VerdictStatus::undecided_class_iii;
      }
      break;
  }
  return v;
}

GraphVerdict classify_graph(const Graph& g) {
  CountVector cv = count_vector(g);
  return classify_counts(cv, static_cast<int>(g.size()));
}

}  // namespace deckclass
