#pragma once

#include <string>

#include "ptgame/prospect.hpp"
#include "ptgame/scenario.hpp"

namespace ptgame {

/// Everything a scenario file carries: the game data, one value function per
/// player, and the probability weighting used by standalone prospect
/// valuation.
struct ScenarioBundle {
  Scenario scenario;
  std::vector<ValueFunction> value_functions;
  WeightingFunction weighting = WeightingFunction::identity();
};

/// Parses the JSON scenario document. Unknown keys are rejected; error
/// messages name the offending field ("randomness.probs", ...).
///
/// Schema (bounds, value_functions and weighting are optional):
///   {
///     "players":   {"a": [...], "b": [...], "y": [...],
///                   "bounds": [[lo, hi], ...]},
///     "randomness": {"support": [...], "probs": [...]},
///     "prices":    {"min": .., "max": ..},
///     "value_functions": [{"kind": "identity" | "log_gain" | "exponential"
///                          | "linear_derivative",
///                          "lambda"?: .., "c"?: .., "d"?: ..}, ...],
///     "weighting": {"kind": "identity" | "tk", "gamma"?: ..}
///   }
ScenarioBundle parse_scenario_json(const std::string& text);

ScenarioBundle load_scenario_file(const std::string& path);

/// Canonical serialization: keys sorted, numbers with 17 significant digits,
/// defaults materialized. parse -> serialize is the identity on canonical
/// documents.
std::string canonical_scenario_json(const ScenarioBundle& bundle);

}  // namespace ptgame
