#include "robustcover/robust.hpp"

#include <limits>

#include "robustcover/errors.hpp"
#include "robustcover/maxmin.hpp"

namespace robustcover {

namespace {

DiscriminatingOutput runThresholdLoop(const CoveringProblem& problem, const Cost& threshold,
                                      const ScenarioPicker& picker, const Cost& onlineFactor,
                                      GuaranteeFactors factors) {
  if (threshold.isNegative()) throw PreconditionError("threshold must be nonnegative");
  if (onlineFactor < Cost(1)) throw PreconditionError("online factor must be at least one");

  DiscriminatingOutput out;
  out.threshold = threshold;
  out.factors = std::move(factors);
  out.problem = &problem;

  auto run = problem.startOnline();
  const Cost exitBound = Cost(2) * onlineFactor * threshold;
  // Every non-exit iteration has positive marginal and therefore buys at
  // least one element, so the loop runs at most numElements + 1 times.
  const int iterationCap = problem.numElements() + 2;
  for (int t = 1;; ++t) {
    if (t > iterationCap) {
      throw Error("threshold loop exceeded its iteration cap; this is a bug");
    }
    RobustIteration iteration;
    iteration.firstStageBefore = run->ownedElements();
    iteration.onlineBefore = run->totalCost();
    iteration.feedOrder = picker(*run);
    iteration.scenario = normalizedIndexSet(iteration.feedOrder);
    iteration.onlineAfter = run->totalCost();
    const bool done = iteration.onlineAfter - iteration.onlineBefore <= exitBound;
    out.iterations.push_back(std::move(iteration));
    if (done) {
      out.firstStage = out.iterations.back().firstStageBefore;
      out.firstStageCost = out.iterations.back().onlineBefore;
      break;
    }
  }
  return out;
}

Cost offlineFactorOf(const CoveringProblem& problem, const RobustParams& params) {
  return params.offlineFactor ? *params.offlineFactor : problem.offlineApproxBound();
}

}  // namespace

DiscriminatingOutput robustGeneric(const CoveringProblem& problem, const Cost& threshold,
                                   const ScenarioPicker& maxminOracle, const Cost& maxminFactor,
                                   const RobustParams& params) {
  Cost rhoOff = offlineFactorOf(problem, params);
  GuaranteeFactors factors{Cost(2) * params.onlineFactor, Cost(0),
                           Cost(2) * rhoOff * maxminFactor * params.onlineFactor};
  return runThresholdLoop(problem, threshold, maxminOracle, params.onlineFactor, factors);
}

DiscriminatingOutput robustPSystem(const CoveringProblem& problem,
                                   std::shared_ptr<const IndependenceSystem> omega,
                                   const Cost& threshold, const RobustParams& params) {
  if (!omega) throw PreconditionError("p-system solver needs a system");
  Cost rhoOff = offlineFactorOf(problem, params);
  const int p = omega->pValue();
  GuaranteeFactors factors{Cost(2) * params.onlineFactor, Cost(0),
                           Cost(2) * rhoOff * params.onlineFactor * Cost(p + 2)};
  ScenarioPicker picker = [omega](OnlineRun& run) {
    return maxminGreedySeeded(run, *omega).feedOrder();
  };
  return runThresholdLoop(problem, threshold, picker, params.onlineFactor, factors);
}

DiscriminatingOutput robustUnionPSystems(
    const CoveringProblem& problem,
    std::vector<std::shared_ptr<const IndependenceSystem>> systems, const Cost& threshold,
    const RobustParams& params) {
  int maxP = 0;
  for (const auto& s : systems) {
    if (!s) throw PreconditionError("union solver members must be non-null");
    maxP = std::max(maxP, s->pValue());
  }
  Cost rhoOff = offlineFactorOf(problem, params);
  GuaranteeFactors factors{Cost(2) * params.onlineFactor, Cost(0),
                           Cost(2) * rhoOff * params.onlineFactor * Cost(maxP + 2)};
  const bool commitProbes = params.commitProbes;
  ScenarioPicker picker = [systems, commitProbes](OnlineRun& run) {
    std::vector<int> bestOrder;
    Cost bestDelta(0);
    bool found = false;
    if (commitProbes) {
      for (const auto& system : systems) {
        MaxMinGreedyResult probe = maxminGreedySeeded(run, *system);
        if (!found || bestDelta < probe.addedCost()) {
          found = true;
          bestDelta = probe.addedCost();
          bestOrder = probe.feedOrder();
        }
      }
      return bestOrder;
    }
    for (const auto& system : systems) {
      auto snapshot = run.clone();
      MaxMinGreedyResult probe = maxminGreedySeeded(*snapshot, *system);
      if (!found || bestDelta < probe.addedCost()) {
        found = true;
        bestDelta = probe.addedCost();
        bestOrder = probe.feedOrder();
      }
    }
    for (int e : bestOrder) run.feed(e);
    return bestOrder;
  };
  return runThresholdLoop(problem, threshold, picker, params.onlineFactor, factors);
}

RobustKnapsackOutput robustSystemKnapsack(const CoveringProblem& problem,
                                          std::shared_ptr<const IndependenceSystem> system,
                                          const KnapsackSet& knapsack, const Cost& threshold,
                                          const RobustParams& params) {
  if (!system) throw PreconditionError("knapsack solver needs a system");
  NormalizedKnapsack normalized = normalizeKnapsacks(knapsack);
  SingleKnapsack combined = combineKnapsacks(normalized.set);
  for (int i : normalized.dropped) {
    combined.weights[static_cast<size_t>(i)] = combined.capacity + Cost(1);
  }
  KnapsackPartitionReduction reduction(std::move(combined.weights), combined.capacity,
                                       params.reduction);

  std::vector<std::shared_ptr<const IndependenceSystem>> sigmas;
  reduction.forEachComposition([&](const std::vector<int>& composition) {
    auto matroid = std::make_shared<PartitionMatroid>(reduction.matroidFor(composition));
    sigmas.push_back(std::make_shared<IntersectionSystem>(
        std::vector<std::shared_ptr<const IndependenceSystem>>{system, matroid}));
  });

  RobustKnapsackOutput out;
  out.output = robustUnionPSystems(problem, std::move(sigmas), threshold, params);
  out.deltaUsed = reduction.delta();
  out.weightBound = reduction.weightBound();
  out.objectiveLossFactor =
      splitPartBound(reduction.epsilonEffective(), knapsack.constraintCount());
  out.matroidCount = reduction.matroidCount();
  return out;
}

DiscriminatingOutput robustExplicit(const CoveringProblem& problem,
                                    const std::vector<Scenario>& scenarios, const Cost& threshold,
                                    const RobustParams& params) {
  Cost rhoOff = offlineFactorOf(problem, params);
  // The augmentation oracle and the max-min oracle are the same offline
  // algorithm here, which tightens the augmentation guarantee to one
  // offline factor.
  GuaranteeFactors factors{Cost(2) * params.onlineFactor, Cost(0),
                           Cost(2) * rhoOff * params.onlineFactor};
  std::vector<Scenario> list;
  list.reserve(scenarios.size());
  for (const Scenario& s : scenarios) list.push_back(normalizedIndexSet(s));
  ScenarioPicker picker = [&problem, list](OnlineRun& run) {
    std::vector<int> best;
    Cost bestValue(0);
    bool found = false;
    for (const Scenario& s : list) {
      Cost value = problem.setCost(problem.offlineAugment(s, run.ownedElements()));
      if (!found || bestValue < value) {
        found = true;
        bestValue = value;
        best = s;
      }
    }
    for (int e : best) run.feed(e);
    return best;
  };
  return runThresholdLoop(problem, threshold, picker, params.onlineFactor, factors);
}

RobustSolution thresholdSearch(const CoveringProblem& problem, const Cost& lambda,
                               const Cost& searchStep,
                               const std::function<DiscriminatingOutput(const Cost&)>& runner) {
  if (lambda < Cost(1)) throw PreconditionError("inflation must be at least one");
  if (searchStep <= Cost(0)) throw PreconditionError("search step must be positive");

  std::vector<Cost> grid{Cost(0)};
  Cost total(0);
  Cost smallest(0);
  bool anyPositive = false;
  for (int e = 0; e < problem.numElements(); ++e) {
    const Cost& c = problem.elementCost(e);
    total += c;
    if (Cost(0) < c && (!anyPositive || c < smallest)) {
      anyPositive = true;
      smallest = c;
    }
  }
  if (anyPositive) {
    // No augmentation ever costs more than the whole ground set, so the
    // grid tops out at the total cost. Each step is rounded down to a
    // fixed denominator: gaps only shrink, so consecutive points keep a
    // ratio of at most 1 + searchStep, and 64-bit numerators cannot blow
    // up along the geometric walk.
    const Cost step = Cost(1) + searchStep;
#ifndef ROBUSTCOVER_FLOAT_COST
    std::int64_t headroom = (Cost(10) / searchStep).ceilToInt();
    if (headroom < 10000) headroom = 10000;
    const std::int64_t base = smallest.denominator();
    const std::int64_t snap =
        base <= std::numeric_limits<std::int64_t>::max() / headroom ? base * headroom : base;
#endif
    for (Cost value = smallest; value < total;) {
      grid.push_back(value);
      Cost next = value * step;
#ifndef ROBUSTCOVER_FLOAT_COST
      Cost snapped((next * Cost(snap)).floorToInt(), snap);
      if (value < snapped) next = snapped;
#endif
      value = next;
    }
    grid.push_back(total);
  }

  RobustSolution solution;
  bool found = false;
  for (const Cost& threshold : grid) {
    DiscriminatingOutput run = runner(threshold);
    Cost bound = run.firstStageCost + lambda * run.factors.beta * threshold;
    solution.trace.push_back({threshold, run.firstStageCost, bound});
    if (!found || bound < solution.upperBound) {
      found = true;
      solution.upperBound = bound;
      solution.output = std::move(run);
    }
  }
  return solution;
}

}  // namespace robustcover
