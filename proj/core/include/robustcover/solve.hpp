#pragma once

#include <optional>
#include <string>

#include "robustcover/instance.hpp"
#include "robustcover/robust.hpp"

namespace robustcover {

/// Max-min run over an instance, dispatched on the uncertainty kind.
struct MaxMinRunReport {
  std::string algorithm;  // greedy | knapsack-reduction
  Scenario scenario;
  Cost onlineCost;
  /// certifiedFactor * onlineCost bounds the exact max-min value from
  /// above.
  int certifiedFactor = 0;
  Cost certifiedUpperBound;
  // knapsack path only
  std::optional<MaxMinKnapsackResult> knapsack;
};

MaxMinRunReport solveMaxMinAuto(const RobustInstance& instance, const ReductionParams& reduction,
                                PartSelection selection = PartSelection::Deterministic,
                                std::uint64_t seed = 0);

/// Robust run over an instance, dispatched on the uncertainty kind. With
/// a fixed threshold the trace holds that single run; otherwise the
/// threshold grid is searched.
struct RobustRunReport {
  std::string algorithm;  // psystem | union-knapsack | explicit
  RobustSolution solution;
  /// Approximation guarantees degrade by this factor when the knapsack
  /// reduction enlarged the uncertainty set; 1 otherwise.
  int objectiveLossFactor = 1;
  std::optional<Cost> deltaUsed;
  std::optional<std::uint64_t> matroidCount;
};

RobustRunReport solveRobustAuto(const RobustInstance& instance, const RobustParams& params,
                                std::optional<Cost> fixedThreshold, const Cost& searchStep);

}  // namespace robustcover
