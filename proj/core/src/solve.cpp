#include "robustcover/solve.hpp"

#include "robustcover/errors.hpp"
#include "robustcover/maxmin.hpp"

namespace robustcover {

MaxMinRunReport solveMaxMinAuto(const RobustInstance& instance, const ReductionParams& reduction,
                                PartSelection selection, std::uint64_t seed) {
  MaxMinRunReport report;
  const UncertaintySet& uncertainty = instance.uncertainty;
  if (uncertainty.kind == UncertaintyKind::SystemAndKnapsack) {
    report.algorithm = "knapsack-reduction";
    report.knapsack = maxminSystemKnapsack(*instance.problem, uncertainty.system,
                                           *uncertainty.knapsack, reduction, selection, seed);
    report.scenario = report.knapsack->scenario;
    report.onlineCost = report.knapsack->onlineCost;
    report.certifiedFactor = uncertainty.system->pValue() + 2;
    report.certifiedUpperBound = report.knapsack->certifiedUpperBound;
    return report;
  }
  report.algorithm = "greedy";
  MaxMinGreedyResult greedy = maxminGreedy(*instance.problem, *uncertainty.system);
  report.scenario = greedy.scenario;
  report.onlineCost = greedy.onlineCostAfter;
  report.certifiedFactor = greedy.certifiedFactor;
  report.certifiedUpperBound = Cost(greedy.certifiedFactor) * greedy.onlineCostAfter;
  return report;
}

RobustRunReport solveRobustAuto(const RobustInstance& instance, const RobustParams& params,
                                std::optional<Cost> fixedThreshold, const Cost& searchStep) {
  RobustRunReport report;
  const UncertaintySet& uncertainty = instance.uncertainty;
  std::function<DiscriminatingOutput(const Cost&)> runner;
  if (uncertainty.kind == UncertaintyKind::ExplicitScenarios) {
    report.algorithm = "explicit";
    runner = [&](const Cost& threshold) {
      return robustExplicit(*instance.problem, uncertainty.explicitScenarios, threshold, params);
    };
  } else if (uncertainty.kind == UncertaintyKind::SystemAndKnapsack) {
    report.algorithm = "union-knapsack";
    runner = [&](const Cost& threshold) {
      RobustKnapsackOutput out = robustSystemKnapsack(*instance.problem, uncertainty.system,
                                                      *uncertainty.knapsack, threshold, params);
      report.objectiveLossFactor = out.objectiveLossFactor;
      report.deltaUsed = out.deltaUsed;
      report.matroidCount = out.matroidCount;
      return std::move(out.output);
    };
  } else {
    report.algorithm = "psystem";
    runner = [&](const Cost& threshold) {
      return robustPSystem(*instance.problem, uncertainty.system, threshold, params);
    };
  }

  if (fixedThreshold) {
    DiscriminatingOutput output = runner(*fixedThreshold);
    RobustSolution solution;
    solution.upperBound =
        output.firstStageCost + instance.lambda * output.factors.beta * *fixedThreshold;
    solution.trace.push_back({*fixedThreshold, output.firstStageCost, solution.upperBound});
    solution.output = std::move(output);
    report.solution = std::move(solution);
    return report;
  }
  report.solution = thresholdSearch(*instance.problem, instance.lambda, searchStep, runner);
  return report;
}

}  // namespace robustcover
