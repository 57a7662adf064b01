#pragma once

// Decision procedure for decks of 4..12 edges, generic over the count source
// so that tests can observe which counts are read.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

#include "deckclass/classifier.hpp"

namespace deckclass::detail {

using P = PatternId;

template <class Counts>
class StepEval {
 public:
  StepEval(const Counts& c, DecisionStep& step) : c_(c), step_(step) {}

  bool pos(P id) { return record("s(" + pattern_name(id) + ")>0", c_.count(id) > 0); }
  bool zero(P id) { return !pos(id); }
  mpz_class value(P id) { return mpz_class(std::to_string(c_.count(id))); }

  // Sign of 4·a·b − c², recorded as "<", "=", ">" against zero.
  int quadratic(P a, P b, P c) {
    mpz_class d = 4 * value(a) * value(b) - value(c) * value(c);
    int s = sgn(d);
    record_value("4·s(" + pattern_name(a) + ")·s(" + pattern_name(b) + ") vs s(" + pattern_name(c) + ")²",
                 s < 0 ? "<" : (s == 0 ? "=" : ">"));
    return s;
  }

  int sign_of(const std::string& name, const mpz_class& v) {
    int s = sgn(v);
    record_value(name, s < 0 ? "<0" : (s == 0 ? "=0" : ">0"));
    return s;
  }

 private:
  bool record(const std::string& name, bool v) {
    record_value(name, v ? "true" : "false");
    return v;
  }
  void record_value(const std::string& name, const std::string& v) {
    for (const auto& cnd : step_.conditions)
      if (cnd.name == name) return;
    step_.conditions.push_back({name, v});
  }
  const Counts& c_;
  DecisionStep& step_;
};

template <class Counts>
void require_p2(const Counts& c) {
  if (c.count(P::P2) == 0) throw OutOfScopeError("deck classification requires s(P2) > 0");
}

inline void finish(DecisionStep& s, const std::string& rule, std::optional<DeckClass> outcome) {
  s.rule = rule;
  s.outcome = outcome;
}

template <class Counts>
DeckClass level4(const Counts& c, DecisionTrace& t) {
  DecisionStep s{4, "", {}, {}};
  StepEval<Counts> e(c, s);
  DeckClass r = e.pos(P::C4) ? DeckClass::I : DeckClass::III;
  finish(s, r == DeckClass::I ? "deck4.c4-present" : "deck4.c4-absent", r);
  t.steps.push_back(std::move(s));
  return r;
}

template <class Counts>
DeckClass level6(const Counts& c, DecisionTrace& t) {
  DecisionStep s{6, "", {}, {}};
  StepEval<Counts> e(c, s);
  bool i = e.pos(P::C4) || e.pos(P::C6);
  DeckClass r = i ? DeckClass::I : DeckClass::III;
  finish(s, i ? "deck6.even-cycle-present" : "deck6.even-cycles-absent", r);
  t.steps.push_back(std::move(s));
  return r;
}

// Rows follow the 12-row table for 8-decks; rows 1 and 2 are settled at the
// 4- and 6-deck levels.
template <class Counts>
DeckClass level8(const Counts& c, DecisionTrace& t) {
  DecisionStep s{8, "", {}, {}};
  StepEval<Counts> e(c, s);
  bool c8 = e.pos(P::C8);
  int row;
  DeckClass r;
  if (e.pos(P::C3_O_C3)) {
    row = c8 ? 3 : 8;
    r = c8 ? DeckClass::I : DeckClass::III;
  } else if (e.pos(P::C3_O_C5)) {
    row = c8 ? 4 : 9;
    r = DeckClass::II;
  } else if (e.pos(P::C3_U_C3)) {
    row = c8 ? 5 : 10;
    r = c8 ? DeckClass::I : DeckClass::III;
  } else if (e.pos(P::C3_U_C5)) {
    row = c8 ? 6 : 11;
    r = DeckClass::II;
  } else {
    row = c8 ? 7 : 12;
    r = c8 ? DeckClass::I : DeckClass::III;
  }
  finish(s, "deck8.row" + std::to_string(row), r);
  t.table_row = row;
  t.steps.push_back(std::move(s));
  return r;
}

template <class Counts>
void check_deck8_class3(const Counts& c) {
  auto z = [&](P id) { return c.count(id) == 0; };
  bool base = z(P::C4) && z(P::C6) && z(P::C8);
  int cases = int(!z(P::C3_O_C3)) + int(z(P::C3_O_C3) && z(P::C3_O_C5) && !z(P::C3_U_C3)) +
              int(z(P::C3_O_C3) && z(P::C3_O_C5) && z(P::C3_U_C3) && z(P::C3_U_C5));
  if (!base || cases != 1) throw std::logic_error("8-deck Class III outside the three admissible cases");
}

template <class Counts>
DeckClass level10(const Counts& c, DecisionTrace& t) {
  check_deck8_class3(c);
  DecisionStep s{10, "", {}, {}};
  StepEval<Counts> e(c, s);
  auto by_c10 = [&](const std::string& rule) {
    DeckClass r = e.pos(P::C10) ? DeckClass::I : DeckClass::III;
    finish(s, rule, r);
    return r;
  };
  DeckClass r;
  if (e.pos(P::C3_O_C3)) {
    r = by_c10("deck10.glued-c3c3");
  } else if (e.pos(P::C3_U_C3)) {
    if (e.pos(P::C3_O_C7)) {
      finish(s, "deck10.glued-c3c7", r = DeckClass::II);
    } else if (e.pos(P::C3_P2_C3)) {
      r = by_c10("deck10.bridged-c3c3");
    } else if (e.quadratic(P::C3_P4_C3, P::C5_O_C5, P::C3_P2_C5) < 0) {
      finish(s, "deck10.indefinite-form", r = DeckClass::II);
    } else {
      r = by_c10("deck10.semidefinite-form");
    }
  } else {
    if (e.pos(P::C3_O_C7)) {
      finish(s, "deck10.glued-c3c7", r = DeckClass::II);
    } else if (e.pos(P::C3_U_C7)) {
      finish(s, "deck10.disjoint-c3c7", r = DeckClass::II);
    } else {
      r = by_c10("deck10.no-c3-pairs");
    }
  }
  t.steps.push_back(std::move(s));
  return r;
}

// Which of the four admissible shapes a Class III 10-deck has.
enum class Deck10Case { glued_c3c3 = 1, no_c3_pairs = 2, bridged_c3c3 = 3, form_case = 4 };

template <class Counts>
Deck10Case deck10_case(const Counts& c) {
  // Short-circuit order matches the rules above, so only counts the rules
  // already read are consulted.
  auto z = [&](P id) { return c.count(id) == 0; };
  auto q = [&]() {
    mpz_class a(std::to_string(c.count(P::C3_P4_C3))), b(std::to_string(c.count(P::C5_O_C5))),
        x(std::to_string(c.count(P::C3_P2_C5)));
    return sgn(4 * a * b - x * x);
  };
  bool base = z(P::C4) && z(P::C6) && z(P::C8) && z(P::C10);
  bool k1 = !z(P::C3_O_C3);
  bool k2 = z(P::C3_O_C3) && z(P::C3_O_C5) && z(P::C3_O_C7) && z(P::C3_U_C3) && z(P::C3_U_C5) && z(P::C3_U_C7);
  bool k3 = z(P::C3_O_C3) && z(P::C3_O_C5) && z(P::C3_O_C7) && !z(P::C3_U_C3) && !z(P::C3_P2_C3);
  bool k4 = z(P::C3_O_C3) && z(P::C3_O_C5) && z(P::C3_O_C7) && !z(P::C3_U_C3) && z(P::C3_P2_C3) && q() >= 0;
  if (!base || int(k1) + int(k2) + int(k3) + int(k4) != 1)
    throw std::logic_error("10-deck Class III outside the four admissible cases");
  return k1 ? Deck10Case::glued_c3c3 : k2 ? Deck10Case::no_c3_pairs : k3 ? Deck10Case::bridged_c3c3 : Deck10Case::form_case;
}

template <class Counts>
DeckClass level12(const Counts& c, DecisionTrace& t) {
  Deck10Case which = deck10_case(c);
  DeckClass r = DeckClass::III;
  DecisionStep s{12, "", {}, {}};
  StepEval<Counts> e(c, s);
  std::string base;
  auto two = [&](const std::string& rule) {
    finish(s, base + "." + rule, DeckClass::II);
    return DeckClass::II;
  };
  auto by_c12 = [&]() {
    DeckClass r = e.pos(P::C12) ? DeckClass::I : DeckClass::III;
    finish(s, base + ".c12", r);
    return r;
  };
  // The three conditions on 5-cycles pairs shared by several shapes.
  auto glued_c5c7 = [&]() { return e.zero(P::C5_O_C5) && e.pos(P::C5_O_C7); };
  auto disjoint_c5c7 = [&]() { return e.zero(P::C5_O_C5) && e.zero(P::C5_U_C5) && e.pos(P::C5_U_C7); };
  switch (which) {
    case Deck10Case::glued_c3c3:
      base = "deck12.glued-c3c3";
      if (glued_c5c7()) r = two("glued-c5c7");
      else if (disjoint_c5c7()) r = two("disjoint-c5c7");
      else r = by_c12();
      break;
    case Deck10Case::no_c3_pairs:
      base = "deck12.no-c3-pairs";
      if (e.pos(P::C3_O_C9)) r = two("glued-c3c9");
      else if (e.pos(P::C3_U_C9)) r = two("disjoint-c3c9");
      else if (glued_c5c7()) r = two("glued-c5c7");
      else if (disjoint_c5c7()) r = two("disjoint-c5c7");
      else r = by_c12();
      break;
    case Deck10Case::bridged_c3c3:
      base = "deck12.bridged-c3c3";
      if (e.pos(P::C3_O_C9)) r = two("glued-c3c9");
      else if (glued_c5c7()) r = two("glued-c5c7");
      else if (disjoint_c5c7()) r = two("disjoint-c5c7");
      else r = by_c12();
      break;
    case Deck10Case::form_case: {
      bool p33 = e.pos(P::C3_P4_C3);
      bool p55 = e.pos(P::C5_O_C5);
      if (!p33 && !p55) {
        base = "deck12.form-zero";
        if (e.pos(P::C3_O_C9)) r = two("glued-c3c9");
        else if (e.pos(P::C3_P2_C7)) r = two("bridged-c3c7");
        else if (e.quadratic(P::C3_P6_C3, P::C5_P2_C5, P::C3_P4_C5) < 0) r = two("indefinite-long-form");
        else if (e.pos(P::C5_O_C7)) r = two("glued-c5c7");
        else if (e.zero(P::C5_U_C5) && e.pos(P::C5_U_C3P1C3)) r = two("c5-beside-bridged-c3c3");
        else if (e.zero(P::C5_U_C5) && e.pos(P::C5_U_C7)) r = two("disjoint-c5c7");
        else r = by_c12();
      } else if (!p33) {
        base = "deck12.form-c5c5-only";
        if (e.pos(P::C3_O_C9)) r = two("glued-c3c9");
        else if (e.pos(P::C3_P2_C7)) r = two("bridged-c3c7");
        else r = by_c12();
      } else if (!p55) {
        base = "deck12.form-c3p4c3-only";
        if (e.pos(P::C3_O_C9)) r = two("glued-c3c9");
        else if (e.pos(P::C5_O_C7)) r = two("glued-c5c7");
        else if (e.zero(P::C5_U_C5) && e.pos(P::C5_U_C7)) r = two("disjoint-c5c7");
        else r = by_c12();
      } else {
        int q = e.quadratic(P::C3_P4_C3, P::C5_O_C5, P::C3_P2_C5);
        if (q < 0) throw std::logic_error("indefinite 10-edge form reached the 12-deck");
        if (q == 0) {
          base = "deck12.form-rank-one";
          mpz_class s55 = e.value(P::C5_O_C5), s35 = e.value(P::C3_P2_C5);
          mpz_class v1 = -2 * s55, v2 = s35;
          mpz_class a = v1 * v1 * e.value(P::C3_P6_C3) + v1 * v2 * e.value(P::C3_P4_C5) +
                        v2 * v2 * e.value(P::C5_P2_C5);
          mpz_class mixed = -2 * e.value(P::C3_P2_C7) * s55 + e.value(P::C5_O_C7) * s35;
          if (e.pos(P::C3_O_C9)) r = two("glued-c3c9");
          else if (e.sign_of("A", a) < 0) r = two("negative-a");
          else if (e.sign_of("-2·s(C3⊕P2⊕C7)·s(C5⊕C5)+s(C5⊕C7)·s(C3⊕P2⊕C5)", mixed) != 0) r = two("mixed-term");
          else r = by_c12();
        } else {
          base = "deck12.form-definite";
          if (e.pos(P::C3_O_C9)) r = two("glued-c3c9");
          else r = by_c12();
        }
      }
      break;
    }
  }
  t.steps.push_back(std::move(s));
  return r;
}

// Runs levels 4..deck, stopping at the first Class I or II.
template <class Counts>
DeckResult cascade(const Counts& c, int deck) {
  require_p2(c);
  DecisionTrace t;
  DeckClass r = DeckClass::III;
  if (deck == 2) {
    DecisionStep s{2, "deck2.balanced", {{"s(P2)>0", "true"}}, DeckClass::III};
    t.steps.push_back(s);
    return {DeckClass::III, t};
  }
  if (deck < 4 || deck > 12 || deck % 2) throw std::invalid_argument("deck size must be an even number in 2..12");
  using Level = DeckClass (*)(const Counts&, DecisionTrace&);
  const Level levels[] = {level4<Counts>, level6<Counts>, level8<Counts>, level10<Counts>, level12<Counts>};
  for (int d = 4, i = 0; d <= deck; d += 2, ++i) {
    r = levels[i](c, t);
    if (r != DeckClass::III) break;
  }
  // Intermediate Class III steps are hand-offs.
  for (std::size_t i = 0; i + 1 < t.steps.size(); ++i) t.steps[i].outcome.reset();
  return {r, t};
}

}  // namespace deckclass::detail
