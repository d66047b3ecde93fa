#pragma once

#include <cstdint>
#include <functional>
#include <memory>

#include "robustcover/covering.hpp"
#include "robustcover/knapsack.hpp"
#include "robustcover/maxmin.hpp"

namespace robustcover {

/// Tuning for the knapsack-to-partition-matroid reduction. The matroid
/// family size explodes as delta shrinks, so enumeration is lazy and
/// guarded by a cap; the accuracy bought by a given delta is a weight
/// slack of (1 + 6*delta) times the capacity.
struct ReductionParams {
  Cost delta{1};  // in (0, 1]
  std::uint64_t enumerationCap = 100000;
};

/// A family of partition matroids approximating one knapsack constraint.
///
/// Ground indices are bucketed by weight into a "small" group, geometric
/// groups, and an oversize group for weights above the capacity (always
/// capped at zero members since such an index alone already violates the
/// knapsack). One matroid is emitted per composition of partitionTotal()
/// into groupCount() nonnegative parts, in ascending lexicographic order.
///
/// Guarantees: every set feasible in an emitted matroid has weight at
/// most weightBound(), and every set within the knapsack capacity is
/// feasible in the matroid located for it.
class KnapsackPartitionReduction {
 public:
  KnapsackPartitionReduction(std::vector<Cost> weights, Cost capacity, ReductionParams params);

  int groundSize() const { return static_cast<int>(weights_.size()); }
  int groupCount() const { return groupCount_; }        // geometric groups
  int partitionTotal() const { return partitionTotal_; }
  const Cost& beta() const { return beta_; }            // small-weight threshold
  const Cost& delta() const { return params_.delta; }
  Cost epsilonEffective() const { return Cost(6) * params_.delta; }
  Cost weightBound() const;                             // (1 + 6*delta) * capacity
  const Cost& capacity() const { return capacity_; }

  /// Number of emitted matroids; saturates at the uint64 maximum.
  std::uint64_t matroidCount() const { return matroidCount_; }
  bool matroidCountExact() const { return matroidCountExact_; }

  /// Groups by index: [small, geometric..., oversize-if-present].
  const std::vector<IndexSet>& groups() const { return groups_; }

  /// The matroid for one composition of partitionTotal() into
  /// groupCount() nonnegative parts.
  PartitionMatroid matroidFor(const std::vector<int>& composition) const;

  /// Enumerates compositions in ascending lexicographic order; throws
  /// EnumerationCapExceeded when matroidCount() exceeds the cap.
  void forEachComposition(const std::function<void(const std::vector<int>&)>& visit) const;

  /// Constructive location for a set within the capacity: the composition
  /// whose matroid provably admits it. Per-group quotas are rounded up
  /// from the group weights; slack is padded into the first group.
  std::vector<int> locate(const IndexSet& feasibleSet) const;

  /// Whether some emitted matroid admits the set, decided in closed form
  /// from the smallest per-group quota each group count requires.
  bool memberOfAny(const IndexSet& set) const;

  /// Smallest delta from a fixed grid whose matroid family fits the cap.
  static Cost chooseDelta(int groundSize, std::uint64_t cap);

 private:
  int groupOf(int index) const { return groupOf_[static_cast<size_t>(index)]; }
  int boundFor(int group, int quota) const;

  std::vector<Cost> weights_;
  Cost capacity_;
  ReductionParams params_;
  Cost beta_;
  int groupCount_ = 0;
  int partitionTotal_ = 0;
  std::vector<IndexSet> groups_;   // size groupCount_ + 1 (+1 more when oversize present)
  std::vector<int> groupOf_;       // 0 = small, 1..G = geometric, G+1 = oversize
  bool hasOversize_ = false;
  std::vector<Cost> powers_;       // (1+delta)^k for k = 0..G
  std::uint64_t matroidCount_ = 1;
  bool matroidCountExact_ = true;
};

/// Splits a set with bounded combined weight into few parts, each
/// feasible for the normalized q-knapsack: starting from singletons,
/// repeatedly merge the first feasible pair in index order. The part
/// count is bounded by splitPartBound(epsilon, q) because any two final
/// parts together violate some constraint.
std::vector<Scenario> splitScenario(const Scenario& scenario, const KnapsackSet& normalized,
                                    const Cost& epsilon);

/// floor(2 * (1 + epsilon) * q) + 1.
int splitPartBound(const Cost& epsilon, int q);

enum class PartSelection { Deterministic, Randomized };

struct MaxMinKnapsackResult {
  Scenario scenario;                  // selected part, a member of the full uncertainty set
  Scenario matroidScenario;           // greedy scenario of the winning matroid
  std::vector<int> matroidFeedOrder;
  std::uint64_t chosenMatroid = 0;
  std::vector<int> chosenComposition;
  std::vector<Scenario> parts;
  Cost onlineCost;                    // online cost of the winning greedy run
  Cost certifiedUpperBound;           // (p + 2) * onlineCost >= exact max-min value
  Cost deltaUsed;
  Cost weightBound;
  int partBound = 0;
  std::uint64_t matroidCount = 0;
};

/// Max-min scenario under a p-system intersected with a q-knapsack:
/// combine the knapsack constraints, reduce the combination to partition
/// matroids, run the greedy builder inside each intersection, keep the
/// matroid with the costliest online run, split its scenario into
/// knapsack-feasible parts and return one part — the offline-costliest
/// one, or a uniformly random one in randomized mode.
MaxMinKnapsackResult maxminSystemKnapsack(const CoveringProblem& problem,
                                          std::shared_ptr<const IndependenceSystem> system,
                                          const KnapsackSet& knapsack,
                                          const ReductionParams& params,
                                          PartSelection selection = PartSelection::Deterministic,
                                          std::uint64_t seed = 0);

}  // namespace robustcover
