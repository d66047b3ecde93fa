#pragma once

#include <vector>

#include "robustcover/cost.hpp"
#include "robustcover/independence.hpp"
#include "robustcover/sets.hpp"

namespace robustcover {

/// q simultaneous linear weight constraints over requirement indices:
/// a set is feasible iff every constraint's weight sum stays within its
/// capacity.
class KnapsackSet {
 public:
  KnapsackSet(std::vector<std::vector<Cost>> weights, std::vector<Cost> capacities);

  int constraintCount() const { return static_cast<int>(capacities_.size()); }
  int groundSize() const { return groundSize_; }

  const std::vector<Cost>& weights(int constraint) const;
  const Cost& capacity(int constraint) const;

  Cost constraintWeight(int constraint, const IndexSet& set) const;
  bool contains(const IndexSet& set) const;

  /// True when every capacity equals one.
  bool normalized() const;

 private:
  std::vector<std::vector<Cost>> weights_;
  std::vector<Cost> capacities_;
  int groundSize_;
};

struct NormalizedKnapsack {
  KnapsackSet set;
  /// Indices whose scaled weight exceeds one in some constraint: they can
  /// never appear in a feasible set and are excluded from the family.
  IndexSet dropped;
};

/// Rescales every constraint to capacity one. Feasibility is preserved
/// exactly: a set is feasible before iff it avoids `dropped` and is
/// feasible after.
NormalizedKnapsack normalizeKnapsacks(const KnapsackSet& knapsack);

/// One linear constraint; the combined form of a normalized q-knapsack.
struct SingleKnapsack {
  std::vector<Cost> weights;
  Cost capacity;
};

/// Sums the q normalized constraints into one of capacity q. Every set
/// feasible for the q-knapsack is feasible for the combined knapsack.
SingleKnapsack combineKnapsacks(const KnapsackSet& normalized);

/// Adapter presenting a knapsack family as an independence system for
/// diagnostics; the caller declares p.
class KnapsackSystemView final : public IndependenceSystem {
 public:
  KnapsackSystemView(KnapsackSet knapsack, int declaredP);

  int groundSize() const override { return knapsack_.groundSize(); }
  bool contains(const IndexSet& set) const override { return knapsack_.contains(set); }
  int pValue() const override { return declaredP_; }
  std::string describe() const override;

 private:
  KnapsackSet knapsack_;
  int declaredP_;
};

}  // namespace robustcover
