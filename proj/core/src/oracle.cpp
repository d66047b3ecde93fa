#include "robustcover/oracle.hpp"

#include "robustcover/errors.hpp"

namespace robustcover {

ExactOracle::ExactOracle(const CoveringProblem& problem, ExactBudget budget)
    : problem_(&problem), budget_(budget) {
  const int m = problem.numElements();
  const int n = problem.numRequirements();
  if (m > budget_.maxElements) {
    throw BudgetExceeded("instance has " + std::to_string(m) + " elements; oracle budget is " +
                         std::to_string(budget_.maxElements));
  }
  if (n > budget_.maxRequirements) {
    throw BudgetExceeded("instance has " + std::to_string(n) +
                         " requirements; oracle budget is " +
                         std::to_string(budget_.maxRequirements));
  }
  const std::uint32_t masks = std::uint32_t{1} << m;
  coveredBy_.assign(masks, 0);
  maskCost_.assign(masks, Cost(0));
  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    if (mask != 0) {
      std::uint32_t low = mask & (~mask + 1);
      int lowIndex = __builtin_ctz(mask);
      maskCost_[mask] = maskCost_[mask ^ low] + problem.elementCost(lowIndex);
    }
    IndexSet elements = fromMask(mask);
    std::uint16_t covered = 0;
    for (int i = 0; i < n; ++i) {
      if (problem.satisfies(i, elements)) covered |= static_cast<std::uint16_t>(1u << i);
    }
    coveredBy_[mask] = covered;
  }
}

std::uint32_t ExactOracle::fullElementMask() const {
  return (std::uint32_t{1} << problem_->numElements()) - 1u;
}

Cost ExactOracle::optAugMasks(std::uint32_t reqMask, std::uint32_t ownedMask,
                              std::uint32_t* witness) const {
  if ((coveredBy_[fullElementMask()] & reqMask) != reqMask) {
    throw InfeasibleRequirement("some requested requirement is unsatisfiable");
  }
  const std::uint32_t free = fullElementMask() & ~ownedMask;
  bool found = false;
  Cost bestCost(0);
  std::uint32_t bestMask = 0;
  std::uint32_t sub = free;
  for (;;) {
    if ((coveredBy_[ownedMask | sub] & reqMask) == reqMask) {
      const Cost& c = maskCost_[sub];
      if (!found || c < bestCost || (c == bestCost && sub < bestMask)) {
        found = true;
        bestCost = c;
        bestMask = sub;
      }
    }
    if (sub == 0) break;
    sub = (sub - 1) & free;
  }
  if (!found) {
    throw InfeasibleRequirement("no augmentation covers the requested requirements");
  }
  if (witness) *witness = bestMask;
  return bestCost;
}

ExactAugmentation ExactOracle::optAug(const IndexSet& reqs, const IndexSet& owned) const {
  std::uint32_t witness = 0;
  Cost cost = optAugMasks(toMask(reqs), toMask(owned), &witness);
  return {cost, fromMask(witness)};
}

std::vector<Scenario> ExactOracle::enumerateScenarios(const UncertaintySet& uncertainty) const {
  if (uncertainty.kind == UncertaintyKind::ExplicitScenarios) {
    return uncertainty.explicitScenarios;
  }
  const int n = uncertainty.groundSize();
  if (n > budget_.maxRequirements) {
    throw BudgetExceeded("uncertainty ground set exceeds the oracle requirement budget");
  }
  const std::uint64_t total = std::uint64_t{1} << n;
  if (total > static_cast<std::uint64_t>(budget_.maxScenarios)) {
    throw BudgetExceeded("scenario enumeration exceeds the oracle scenario budget");
  }
  std::vector<Scenario> out;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Scenario s = fromMask(static_cast<std::uint32_t>(mask));
    if (uncertainty.contains(s)) out.push_back(std::move(s));
  }
  return out;
}

ExactMaxMin ExactOracle::maxMin(const UncertaintySet& uncertainty) const {
  ExactMaxMin best{Cost(0), {}};
  bool found = false;
  for (const Scenario& s : enumerateScenarios(uncertainty)) {
    Cost value = optAugMasks(toMask(s), 0, nullptr);
    if (!found || best.value < value || (best.value == value && lexSmaller(s, best.scenario))) {
      found = true;
      best.value = value;
      best.scenario = s;
    }
  }
  return best;
}

ExactRobust ExactOracle::robust(const UncertaintySet& uncertainty, const Cost& lambda) const {
  if (lambda < Cost(1)) throw PreconditionError("inflation must be at least one");
  std::vector<std::uint32_t> scenarioMasks;
  for (const Scenario& s : enumerateScenarios(uncertainty)) scenarioMasks.push_back(toMask(s));

  bool found = false;
  ExactRobust best{Cost(0), {}, Cost(0), Cost(0)};
  const std::uint32_t full = fullElementMask();
  for (std::uint32_t first = 0;; ++first) {
    const Cost& firstCost = maskCost_[first];
    if (!found || firstCost < best.value) {
      Cost worst(0);
      bool pruned = false;
      for (std::uint32_t sMask : scenarioMasks) {
        Cost aug = optAugMasks(sMask, first, nullptr);
        if (worst < aug) worst = aug;
        if (found && !(firstCost + lambda * worst < best.value)) {
          pruned = true;
          break;
        }
      }
      if (!pruned) {
        Cost objective = firstCost + lambda * worst;
        // First stages enumerate in ascending mask order; strict
        // improvement keeps the smallest-mask minimizer.
        if (!found || objective < best.value) {
          found = true;
          best.value = objective;
          best.firstStage = fromMask(first);
          best.firstStageCost = firstCost;
          best.secondStageCost = worst;
        }
      }
    }
    if (first == full) break;
  }
  return best;
}

Cost ExactOracle::onlineRatioBound() const {
  const int n = problem_->numRequirements();
  if (n > budget_.maxRequirements) {
    throw BudgetExceeded("online ratio bound exceeds the requirement budget");
  }
  std::vector<Cost> single(static_cast<size_t>(n), Cost(0));
  for (int i = 0; i < n; ++i) {
    single[static_cast<size_t>(i)] = onlineReplay(*problem_, {i})->totalCost();
  }
  Cost bound(1);
  const std::uint32_t total = std::uint32_t{1} << n;
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    Cost sum(0);
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) sum += single[static_cast<size_t>(i)];
    }
    Cost opt = optAugMasks(mask, 0, nullptr);
    if (opt.isZero()) continue;  // a zero optimum forces zero singles under the lazy rules
    Cost ratio = sum / opt;
    if (bound < ratio) bound = ratio;
  }
  return bound;
}

Cost ExactOracle::offlineRatioBound() const {
  const int n = problem_->numRequirements();
  const std::uint32_t reqTotal = std::uint32_t{1} << n;
  const std::uint32_t full = fullElementMask();
  Cost bound(1);
  for (std::uint32_t owned = 0;; ++owned) {
    IndexSet ownedSet = fromMask(owned);
    for (std::uint32_t reqMask = 1; reqMask < reqTotal; ++reqMask) {
      Cost opt = optAugMasks(reqMask, owned, nullptr);
      IndexSet approx = problem_->offlineAugment(fromMask(reqMask), ownedSet);
      Cost approxCost = problem_->setCost(approx);
      if (opt.isZero()) {
        if (!approxCost.isZero()) {
          throw Error("offline algorithm paid for a free augmentation");
        }
        continue;
      }
      Cost ratio = approxCost / opt;
      if (bound < ratio) bound = ratio;
    }
    if (owned == full) break;
  }
  return bound;
}

PSystemCheck verifyPSystem(const IndependenceSystem& system, int declaredP,
                           const ExactBudget& budget) {
  if (system.groundSize() > budget.maxRequirements) {
    throw BudgetExceeded("p-system verification exceeds the requirement budget");
  }
  int smallest = smallestPSystemValue(system);
  return {smallest <= declaredP, smallest};
}

}  // namespace robustcover
