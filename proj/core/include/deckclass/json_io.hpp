#pragma once

#include <json.hpp>

#include "deckclass/classifier.hpp"
#include "deckclass/core_kernel.hpp"
#include "deckclass/kernel.hpp"
#include "deckclass/perturbation.hpp"
#include "deckclass/power_sums.hpp"
#include "deckclass/verifier.hpp"
#include "deckclass/witness.hpp"

namespace deckclass {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "deckclass/1";

Json rational_json(const Rational& r);
Rational rational_from_json(const Json& j);  // "p/q" string or integer

Json trace_json(const DecisionTrace& t);
Json verdict_json(const GraphVerdict& v);
Json counts_json(const CountVector& cv);
CountVector counts_from_json(const Json& j);
Json multiset_json(const WeightedMultiset& ms);

Json params_json(const CoreKernelParams& p);
CoreKernelParams params_from_json(const Json& j);
Json spec_json(const CoreKernelSpec& s);
Json recipe_json(const WitnessRecipe& w);
Json report_json(const WitnessReport& r);
Json poly_json(const EpsPolynomial& p);

Json kernel_json(const StepKernel& u);
// Accepts the grid form and the rank-one form; the latter is sampled onto
// the coarsest uniform grid carrying all breakpoints.
StepKernel kernel_from_json(const Json& j, int max_cells = 4096);
RankOneSum rank_one_from_json(const Json& j);
StepKernel to_step_kernel(const RankOneSum& u, int max_cells = 4096);

}  // namespace deckclass
