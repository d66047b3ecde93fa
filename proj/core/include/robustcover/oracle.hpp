#pragma once

#include <cstdint>
#include <vector>

#include "robustcover/covering.hpp"
#include "robustcover/uncertainty.hpp"

namespace robustcover {

/// Hard limits for the exhaustive solvers. Work beyond a limit is refused
/// with BudgetExceeded, never silently truncated.
struct ExactBudget {
  int maxElements = 16;
  int maxRequirements = 12;
  int maxScenarios = 4096;
};

struct ExactAugmentation {
  Cost cost;
  IndexSet witness;
};

struct ExactMaxMin {
  Cost value;
  Scenario scenario;
};

struct ExactRobust {
  Cost value;           // firstStageCost + lambda * secondStageCost
  IndexSet firstStage;
  Cost firstStageCost;  // Φ*
  Cost secondStageCost; // T*
};

struct PSystemCheck {
  bool holds;
  int smallestValid;
};

/// Exhaustive ground-truth solvers at desk scale. All answers are exact;
/// ties break toward the smallest element bitmask (augmentations, first
/// stages) or the lexicographically smallest scenario.
class ExactOracle {
 public:
  explicit ExactOracle(const CoveringProblem& problem, ExactBudget budget = {});

  const ExactBudget& budget() const { return budget_; }

  /// Minimum-cost augmentation of `owned` for requirements `reqs`.
  ExactAugmentation optAug(const IndexSet& reqs, const IndexSet& owned) const;
  Cost optValue(const IndexSet& reqs) const { return optAug(reqs, {}).cost; }

  /// max over scenarios in the uncertainty set of the min-cost cover.
  ExactMaxMin maxMin(const UncertaintySet& uncertainty) const;

  /// Exhaustive two-stage optimum over all first-stage subsets.
  ExactRobust robust(const UncertaintySet& uncertainty, const Cost& lambda) const;

  /// Instance-wide upper bound on the online rule's cost ratio: the worst,
  /// over nonempty requirement sets X, of the sum of fresh single-request
  /// online costs over X divided by the exact optimum of X. Every online
  /// run on this instance stays within this factor of the optimum of its
  /// request set, because a request's marginal never exceeds its
  /// fresh-run cost under the lazy rules used here.
  Cost onlineRatioBound() const;

  /// Instance-wide upper bound on the offline algorithm's ratio: the
  /// worst, over all (requirement set, owned set) pairs, of approximate
  /// over exact augmentation cost.
  Cost offlineRatioBound() const;

  /// Enumerates all scenarios of the uncertainty set (listed scenarios
  /// for the explicit kind).
  std::vector<Scenario> enumerateScenarios(const UncertaintySet& uncertainty) const;

 private:
  std::uint32_t fullElementMask() const;
  Cost optAugMasks(std::uint32_t reqMask, std::uint32_t ownedMask,
                   std::uint32_t* witness) const;

  const CoveringProblem* problem_;
  ExactBudget budget_;
  std::vector<std::uint16_t> coveredBy_;  // element mask -> requirement mask
  std::vector<Cost> maskCost_;
};

/// Checks a declared p against the exhaustive ratio of maximal
/// independent-set sizes within every ground subset.
PSystemCheck verifyPSystem(const IndependenceSystem& system, int declaredP,
                           const ExactBudget& budget = {});

}  // namespace robustcover
