#include "robustcover/covering.hpp"

#include "robustcover/errors.hpp"

namespace robustcover {

CoveringProblem::CoveringProblem(std::vector<Cost> elementCosts, int numRequirements)
    : costs_(std::move(elementCosts)), numRequirements_(numRequirements) {
  if (numRequirements_ < 0) throw InvalidInstance("negative requirement count");
}

const Cost& CoveringProblem::elementCost(int element) const {
  if (element < 0 || element >= numElements()) {
    throw PreconditionError("element index " + std::to_string(element) + " out of range");
  }
  return costs_[static_cast<size_t>(element)];
}

Cost CoveringProblem::setCost(const IndexSet& elements) const {
  Cost total(0);
  for (int e : elements) total += elementCost(e);
  return total;
}

bool CoveringProblem::satisfiesAll(const IndexSet& requirements, const IndexSet& solution) const {
  for (int i : requirements) {
    if (!satisfies(i, solution)) return false;
  }
  return true;
}

void CoveringProblem::validate() const {
  for (int e = 0; e < numElements(); ++e) {
    if (costs_[static_cast<size_t>(e)].isNegative()) {
      throw InvalidInstance("element " + std::to_string(e) + " has a negative cost");
    }
  }
  const IndexSet everything = indexRange(numElements());
  for (int i = 0; i < numRequirements(); ++i) {
    if (!satisfies(i, everything)) {
      throw InvalidInstance("requirement " + std::to_string(i) +
                            " is not satisfied even by the full ground set");
    }
  }
}

FeedResult OnlineRun::feed(int requirement) {
  if (requirement < 0 || requirement >= problem_->numRequirements()) {
    throw PreconditionError("requirement index " + std::to_string(requirement) + " out of range");
  }
  IndexSet bought = buy(requirement);
  for (int e : bought) {
    if (setContains(owned_, e)) {
      throw Error("online rule re-bought element " + std::to_string(e));
    }
  }
  Cost marginal = problem_->setCost(bought);
  for (int e : bought) insertIndex(owned_, e);
  sequence_.push_back(requirement);
  cost_ += marginal;
  if (!problem_->satisfies(requirement, owned_)) {
    throw Error("online rule failed to satisfy requirement " + std::to_string(requirement));
  }
  return {std::move(bought), marginal};
}

std::unique_ptr<OnlineRun> onlineReplay(const CoveringProblem& problem,
                                        const std::vector<int>& sequence) {
  auto run = problem.startOnline();
  for (int i : sequence) run->feed(i);
  return run;
}

}  // namespace robustcover
