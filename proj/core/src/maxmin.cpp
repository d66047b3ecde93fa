#include "robustcover/maxmin.hpp"

#include "robustcover/errors.hpp"

namespace robustcover {

std::vector<int> MaxMinGreedyResult::feedOrder() const {
  std::vector<int> order;
  order.reserve(trace.size());
  for (const GreedyStep& step : trace) order.push_back(step.requirement);
  return order;
}

MaxMinGreedyResult maxminGreedySeeded(OnlineRun& run, const IndependenceSystem& omega) {
  const int n = run.problem().numRequirements();
  if (omega.groundSize() != n) {
    throw PreconditionError("uncertainty ground set must match the requirement count");
  }
  MaxMinGreedyResult result;
  result.onlineCostBefore = run.totalCost();
  result.certifiedFactor = omega.pValue() + 1;

  Scenario chosen;
  for (;;) {
    int bestRequirement = -1;
    Cost bestMarginal(0);
    for (int e = 0; e < n; ++e) {
      if (setContains(chosen, e)) continue;
      if (!omega.canExtend(chosen, e)) continue;
      auto probe = run.clone();
      Cost marginal = probe->feed(e).marginal;
      if (bestRequirement < 0 || bestMarginal < marginal) {
        bestRequirement = e;
        bestMarginal = marginal;
      }
    }
    if (bestRequirement < 0) break;
    run.feed(bestRequirement);
    insertIndex(chosen, bestRequirement);
    result.trace.push_back({bestRequirement, bestMarginal});
  }

  result.scenario = std::move(chosen);
  result.onlineCostAfter = run.totalCost();
  return result;
}

MaxMinGreedyResult maxminGreedy(const CoveringProblem& problem, const IndependenceSystem& omega) {
  auto run = problem.startOnline();
  return maxminGreedySeeded(*run, omega);
}

}  // namespace robustcover
