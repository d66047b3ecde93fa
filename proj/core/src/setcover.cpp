#include "robustcover/setcover.hpp"

#include "robustcover/errors.hpp"

namespace robustcover {

namespace {

class SetCoverRun final : public OnlineRun {
 public:
  explicit SetCoverRun(const SetCoverProblem& problem)
      : OnlineRun(problem),
        problem_(&problem),
        covered_(static_cast<size_t>(problem.numRequirements()), 0) {}

  std::unique_ptr<OnlineRun> clone() const override {
    return std::unique_ptr<OnlineRun>(new SetCoverRun(*this));
  }

 protected:
  IndexSet buy(int item) override {
    if (covered_[static_cast<size_t>(item)]) return {};
    int chosen = problem_->cheapestSetCovering(item);
    if (chosen < 0) {
      throw InfeasibleRequirement("item " + std::to_string(item) + " is in no set");
    }
    for (int i : problem_->itemsOf(chosen)) covered_[static_cast<size_t>(i)] = 1;
    return {chosen};
  }

 private:
  const SetCoverProblem* problem_;
  std::vector<char> covered_;
};

}  // namespace

SetCoverProblem::SetCoverProblem(int itemCount, std::vector<Cost> setCosts,
                                 std::vector<IndexSet> setItems)
    : CoveringProblem(std::move(setCosts), itemCount), sets_(std::move(setItems)) {
  if (sets_.size() != costs_.size()) {
    throw InvalidInstance("each set needs a cost and an item list");
  }
  for (IndexSet& s : sets_) {
    s = normalizedIndexSet(std::move(s));
    for (int i : s) {
      if (i < 0 || i >= itemCount) {
        throw InvalidInstance("set item index " + std::to_string(i) + " out of range");
      }
    }
  }
}

int SetCoverProblem::cheapestSetCovering(int item) const {
  int best = -1;
  for (int j = 0; j < numElements(); ++j) {
    if (!setContains(sets_[static_cast<size_t>(j)], item)) continue;
    if (best < 0 || elementCost(j) < elementCost(best)) best = j;
  }
  return best;
}

bool SetCoverProblem::satisfies(int requirement, const IndexSet& solution) const {
  for (int j : solution) {
    if (setContains(sets_[static_cast<size_t>(j)], requirement)) return true;
  }
  return false;
}

IndexSet SetCoverProblem::offlineAugment(const IndexSet& requirements,
                                         const IndexSet& owned) const {
  std::vector<char> uncovered(static_cast<size_t>(numRequirements()), 0);
  int missing = 0;
  for (int i : requirements) {
    if (!satisfies(i, owned)) {
      uncovered[static_cast<size_t>(i)] = 1;
      ++missing;
    }
  }
  IndexSet result;
  while (missing > 0) {
    int best = -1;
    int bestNew = 0;
    for (int j = 0; j < numElements(); ++j) {
      if (setContains(owned, j) || setContains(result, j)) continue;
      int fresh = 0;
      for (int i : sets_[static_cast<size_t>(j)]) {
        if (uncovered[static_cast<size_t>(i)]) ++fresh;
      }
      if (fresh == 0) continue;
      // Smaller cost per newly covered item wins; ties keep the lower index.
      if (best < 0 || elementCost(j) * bestNew < elementCost(best) * fresh) {
        best = j;
        bestNew = fresh;
      }
    }
    if (best < 0) {
      throw InfeasibleRequirement("uncovered items remain but no set adds coverage");
    }
    insertIndex(result, best);
    for (int i : sets_[static_cast<size_t>(best)]) {
      if (uncovered[static_cast<size_t>(i)]) {
        uncovered[static_cast<size_t>(i)] = 0;
        --missing;
      }
    }
  }
  return result;
}

Cost SetCoverProblem::offlineApproxBound() const {
  Cost h = harmonicCost(numRequirements());
  return h < Cost(1) ? Cost(1) : h;
}

std::unique_ptr<OnlineRun> SetCoverProblem::startOnline() const {
  return std::make_unique<SetCoverRun>(*this);
}

void SetCoverProblem::validate() const {
  CoveringProblem::validate();
  for (int i = 0; i < numRequirements(); ++i) {
    if (cheapestSetCovering(i) < 0) {
      throw InvalidInstance("item " + std::to_string(i) + " belongs to no set");
    }
  }
}

}  // namespace robustcover
