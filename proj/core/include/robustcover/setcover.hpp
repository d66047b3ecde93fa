#pragma once

#include "robustcover/covering.hpp"

namespace robustcover {

/// Weighted set cover: items are the requirements, candidate sets are the
/// purchasable elements.
///
/// Offline augmentation is the greedy best cost-per-newly-covered-item
/// rule (factor H_n). The online rule buys, for an uncovered arriving
/// item, the cheapest set containing it; ties go to the lowest set index.
class SetCoverProblem final : public CoveringProblem {
 public:
  SetCoverProblem(int itemCount, std::vector<Cost> setCosts, std::vector<IndexSet> setItems);

  const IndexSet& itemsOf(int setIndex) const { return sets_[static_cast<size_t>(setIndex)]; }

  /// Lowest-index minimum-cost set containing `item`; -1 when none does.
  int cheapestSetCovering(int item) const;

  bool satisfies(int requirement, const IndexSet& solution) const override;
  IndexSet offlineAugment(const IndexSet& requirements, const IndexSet& owned) const override;
  Cost offlineApproxBound() const override;
  std::unique_ptr<OnlineRun> startOnline() const override;
  std::string kind() const override { return "setcover"; }
  void validate() const override;

 private:
  std::vector<IndexSet> sets_;
};

}  // namespace robustcover
