#pragma once

#include "robustcover/covering.hpp"
#include "robustcover/independence.hpp"

namespace robustcover {

struct GreedyStep {
  int requirement;
  Cost marginal;
};

/// Result of the greedy scenario builder: an inclusion-maximal
/// independent scenario chosen by repeatedly adding the requirement whose
/// online marginal cost is largest, then the costs certifying it. For
/// every independent scenario B, the exact augmentation optimum of B
/// relative to the starting online state is at most
/// certifiedFactor * (onlineCostAfter - onlineCostBefore).
struct MaxMinGreedyResult {
  Scenario scenario;
  std::vector<GreedyStep> trace;  // discovery order
  Cost onlineCostBefore;
  Cost onlineCostAfter;
  int certifiedFactor = 0;  // p + 1

  Cost addedCost() const { return onlineCostAfter - onlineCostBefore; }
  std::vector<int> feedOrder() const;
};

/// Greedy scenario builder seeded with an existing online run; the chosen
/// requirements are committed into `run` in discovery order. Candidate
/// marginals are probed on snapshots, so losing candidates leave no trace.
MaxMinGreedyResult maxminGreedySeeded(OnlineRun& run, const IndependenceSystem& omega);

/// Greedy scenario builder on a fresh online run.
MaxMinGreedyResult maxminGreedy(const CoveringProblem& problem, const IndependenceSystem& omega);

}  // namespace robustcover
