#pragma once

#include <memory>
#include <string>
#include <vector>

#include "robustcover/cost.hpp"
#include "robustcover/sets.hpp"

namespace robustcover {

class OnlineRun;

/// A covering problem: an indexed ground set of purchasable elements with
/// nonnegative costs, plus n monotone requirement oracles over element
/// subsets. Implementations also supply the offline augmentation
/// algorithm and the deterministic online algorithm that the scenario
/// building loops rely on.
///
/// Instances are immutable after construction and safe to share across
/// threads; all oracles are pure functions of their inputs.
class CoveringProblem {
 public:
  virtual ~CoveringProblem() = default;

  int numElements() const { return static_cast<int>(costs_.size()); }
  int numRequirements() const { return numRequirements_; }

  const Cost& elementCost(int element) const;
  Cost setCost(const IndexSet& elements) const;

  /// True iff `solution` satisfies the requirement. Monotone: enlarging
  /// `solution` never turns true into false.
  virtual bool satisfies(int requirement, const IndexSet& solution) const = 0;
  bool satisfiesAll(const IndexSet& requirements, const IndexSet& solution) const;

  /// Approximate min-cost augmentation: returns A with owned ∪ A
  /// satisfying all of `requirements`; A is disjoint from `owned`.
  /// The cost guarantee relative to the exact augmentation optimum is
  /// offlineApproxBound().
  virtual IndexSet offlineAugment(const IndexSet& requirements, const IndexSet& owned) const = 0;

  /// Proven approximation factor of offlineAugment on this instance.
  virtual Cost offlineApproxBound() const = 0;

  /// Fresh deterministic online run over this problem.
  virtual std::unique_ptr<OnlineRun> startOnline() const = 0;

  virtual std::string kind() const = 0;

  /// Structural checks: every cost nonnegative and every requirement
  /// satisfied by the full ground set. Throws InvalidInstance.
  virtual void validate() const;

 protected:
  CoveringProblem(std::vector<Cost> elementCosts, int numRequirements);

  std::vector<Cost> costs_;
  int numRequirements_ = 0;
};

struct FeedResult {
  IndexSet bought;
  Cost marginal;
};

/// Mutable state of a deterministic online algorithm: the request
/// sequence served so far and the monotone element set bought for it.
/// Elements are only ever added, identical sequences yield identical
/// states, and hypothetical extensions are probed on clone()d snapshots
/// so the original run is never disturbed.
///
/// Runs are single-owner mutable state; do not share one across threads.
class OnlineRun {
 public:
  virtual ~OnlineRun() = default;
  virtual std::unique_ptr<OnlineRun> clone() const = 0;

  /// Serve one requirement: buy whatever the online rule dictates and
  /// return the newly bought elements with their cost.
  FeedResult feed(int requirement);

  const IndexSet& ownedElements() const { return owned_; }
  const std::vector<int>& sequence() const { return sequence_; }
  const Cost& totalCost() const { return cost_; }
  const CoveringProblem& problem() const { return *problem_; }

 protected:
  explicit OnlineRun(const CoveringProblem& problem) : problem_(&problem) {}
  OnlineRun(const OnlineRun&) = default;
  OnlineRun& operator=(const OnlineRun&) = default;

  /// The online rule: elements to buy for `requirement`, disjoint from
  /// ownedElements().
  virtual IndexSet buy(int requirement) = 0;

 private:
  const CoveringProblem* problem_;
  IndexSet owned_;
  std::vector<int> sequence_;
  Cost cost_;
};

/// Rebuilds the online state for a request sequence from scratch; equal
/// to feeding the sequence element-wise into a fresh run.
std::unique_ptr<OnlineRun> onlineReplay(const CoveringProblem& problem,
                                        const std::vector<int>& sequence);

}  // namespace robustcover
