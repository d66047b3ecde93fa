#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "robustcover/covering.hpp"
#include "robustcover/knapsack_reduction.hpp"
#include "robustcover/uncertainty.hpp"

namespace robustcover {

/// One pass of the repeat loop: the scenario committed to the request
/// sequence and the online solution around it.
struct RobustIteration {
  Scenario scenario;
  std::vector<int> feedOrder;
  IndexSet firstStageBefore;  // online solution entering the iteration
  Cost onlineBefore;
  Cost onlineAfter;
};

/// Reported guarantee coefficients of a threshold run: first-stage cost
/// is at most alpha1 * optimalFirstStage + alpha2 * optimalSecondStage
/// whenever the threshold is at least the optimal second-stage cost, and
/// every augmentation costs at most beta * threshold.
struct GuaranteeFactors {
  Cost alpha1;
  Cost alpha2;
  Cost beta;
};

/// Output of a threshold-parameterized robust solver: a first-stage
/// element set plus the augmentation procedure for revealed scenarios.
struct DiscriminatingOutput {
  Cost threshold;
  IndexSet firstStage;
  Cost firstStageCost;
  std::vector<RobustIteration> iterations;  // includes the exit iteration
  GuaranteeFactors factors;
  const CoveringProblem* problem = nullptr;

  IndexSet augment(const Scenario& scenario) const {
    return problem->offlineAugment(scenario, firstStage);
  }
  Cost augmentCost(const Scenario& scenario) const {
    return problem->setCost(augment(scenario));
  }
};

struct RobustParams {
  /// Competitive factor plugged into the loop exit test (stop once an
  /// iteration's online marginal is at most 2 * onlineFactor * T) and the
  /// reported guarantees. The certificates proved by the tests hold
  /// whenever this dominates the online rule's cost ratio on the
  /// instance; the oracle's onlineRatioBound() supplies such a value at
  /// desk scale.
  Cost onlineFactor{1};
  /// Offline augmentation factor used in reported guarantees; defaults to
  /// the problem's proven bound.
  std::optional<Cost> offlineFactor;
  ReductionParams reduction{};
  /// Union-of-systems variant only: feed every per-system probe into the
  /// request sequence instead of only the winner. Off by default; the
  /// winner-only reading keeps losing probes out of the online state.
  bool commitProbes = false;
};

/// Scenario source for the generic loop: advances the online run by the
/// scenario it selects and returns that scenario's feed order.
using ScenarioPicker = std::function<std::vector<int>(OnlineRun&)>;

/// Generic reduction from an approximate max-min oracle to a threshold
/// solver: repeatedly ask the oracle for a costly scenario given the
/// current online solution, feed it, and stop once the online marginal
/// drops to 2 * onlineFactor * T. The first stage is the online solution
/// before the exit iteration; augmentation is the offline algorithm.
DiscriminatingOutput robustGeneric(const CoveringProblem& problem, const Cost& threshold,
                                   const ScenarioPicker& maxminOracle, const Cost& maxminFactor,
                                   const RobustParams& params = {});

/// Threshold solver for a p-system uncertainty set: the max-min oracle is
/// the greedy scenario builder seeded with the loop's online state.
DiscriminatingOutput robustPSystem(const CoveringProblem& problem,
                                   std::shared_ptr<const IndependenceSystem> omega,
                                   const Cost& threshold, const RobustParams& params = {});

/// Threshold solver for a union of downward-closed systems: each
/// iteration greedily builds one scenario per member system from the same
/// starting state (on snapshots), commits the one with the largest online
/// marginal, ties toward the lower member index.
DiscriminatingOutput robustUnionPSystems(
    const CoveringProblem& problem,
    std::vector<std::shared_ptr<const IndependenceSystem>> systems, const Cost& threshold,
    const RobustParams& params = {});

struct RobustKnapsackOutput {
  DiscriminatingOutput output;
  Cost deltaUsed;
  Cost weightBound;
  /// Feasibility of the returned policy transfers from the enlarged
  /// matroid-union uncertainty set back to the original one; the
  /// objective guarantee weakens by this factor.
  int objectiveLossFactor = 1;
  std::uint64_t matroidCount = 0;
};

/// Threshold solver for a p-system intersected with a q-knapsack: combine
/// the knapsacks, reduce the combination to partition matroids, and solve
/// over the union of the per-matroid intersections.
RobustKnapsackOutput robustSystemKnapsack(const CoveringProblem& problem,
                                          std::shared_ptr<const IndependenceSystem> system,
                                          const KnapsackSet& knapsack, const Cost& threshold,
                                          const RobustParams& params = {});

/// Threshold solver for explicitly listed scenarios: the max-min oracle
/// is the offline-costliest listed scenario relative to the current
/// online solution (ties toward the lower list index).
DiscriminatingOutput robustExplicit(const CoveringProblem& problem,
                                    const std::vector<Scenario>& scenarios, const Cost& threshold,
                                    const RobustParams& params = {});

struct ThresholdTracePoint {
  Cost threshold;
  Cost firstStageCost;
  Cost upperBound;
};

struct RobustSolution {
  DiscriminatingOutput output;  // the run minimizing the certified upper bound
  Cost upperBound;              // firstStageCost + lambda * beta * threshold
  std::vector<ThresholdTracePoint> trace;
};

/// Converts a threshold solver into an approximation algorithm: evaluate
/// it on a geometric threshold grid from the smallest positive element
/// cost up to the total cost (plus zero), and keep the run whose
/// certified objective bound is smallest. The returned bound is always an
/// upper bound on the true objective of the returned policy.
RobustSolution thresholdSearch(const CoveringProblem& problem, const Cost& lambda,
                               const Cost& searchStep,
                               const std::function<DiscriminatingOutput(const Cost&)>& runner);

}  // namespace robustcover
