#pragma once

#include <array>
#include <string>
#include <vector>

#include "deckclass/classifier.hpp"
#include "deckclass/core_kernel.hpp"

namespace deckclass {

struct WitnessRecipe {
  std::string rule;
  int target_degree = 0;
  CoreKernelParams params;
  std::vector<Rational> z;
  int shrink_steps = 0;
};

using Matrix2 = std::array<std::array<Rational, 2>, 2>;

// Rational z with z^T M z < 0, normalized to -1 when a rational scaling does
// that, otherwise scaled by powers of two until the form is at most -1.
std::vector<Rational> negative_direction(const Matrix2& m);

// Kernel parameters making the first non-zero coefficient negative for the
// Class II rule that ended the trace. shrink_steps > 0 reduces delta further.
WitnessRecipe class2_recipe(const DecisionTrace& trace, const CountVector& cv, int shrink_steps = 0);

// Non-zero balanced kernel killing c_2..c_depth when no even cycle of length
// at most depth is present.
WitnessRecipe class3_null_recipe(int depth);

}  // namespace deckclass
