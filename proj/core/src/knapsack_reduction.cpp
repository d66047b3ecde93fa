#include "robustcover/knapsack_reduction.hpp"

#include <limits>

#include "robustcover/errors.hpp"
#include "robustcover/rng.hpp"

namespace robustcover {

namespace {

constexpr std::uint64_t kUint64Max = std::numeric_limits<std::uint64_t>::max();

std::uint64_t binomialSaturated(int top, int choose, bool& exact) {
  exact = true;
  if (choose < 0 || choose > top) return 0;
  if (choose > top - choose) choose = top - choose;
  unsigned __int128 r = 1;
  for (int i = 1; i <= choose; ++i) {
    r = r * static_cast<unsigned>(top - choose + i);
    r /= static_cast<unsigned>(i);
    if (r > kUint64Max) {
      exact = false;
      return kUint64Max;
    }
  }
  return static_cast<std::uint64_t>(r);
}

struct ReductionShape {
  int groupCount;
  int partitionTotal;
  std::uint64_t matroidCount;
  bool exact;
};

ReductionShape computeShape(int groundSize, const Cost& delta) {
  ReductionShape shape{0, 0, 1, true};
  if (groundSize > 0) {
    const Cost target = Cost(groundSize) / delta;
    Cost acc(1);
    while (acc < target) {
      acc *= Cost(1) + delta;
      ++shape.groupCount;
      if (shape.groupCount > 4096) {
        throw PreconditionError("reduction group count is out of range");
      }
    }
  }
  shape.partitionTotal =
      static_cast<int>((Cost(shape.groupCount) / delta).ceilToInt());
  if (shape.groupCount > 0) {
    shape.matroidCount = binomialSaturated(shape.partitionTotal + shape.groupCount - 1,
                                           shape.groupCount - 1, shape.exact);
  }
  return shape;
}

}  // namespace

KnapsackPartitionReduction::KnapsackPartitionReduction(std::vector<Cost> weights, Cost capacity,
                                                       ReductionParams params)
    : weights_(std::move(weights)), capacity_(std::move(capacity)), params_(params) {
  if (!(Cost(0) < capacity_)) throw PreconditionError("reduction needs a positive capacity");
  if (params_.delta <= Cost(0) || Cost(1) < params_.delta) {
    throw PreconditionError("reduction delta must lie in (0, 1]");
  }
  for (const Cost& w : weights_) {
    if (w.isNegative()) throw PreconditionError("reduction weights must be nonnegative");
  }
  const int n = groundSize();
  ReductionShape shape = computeShape(n, params_.delta);
  groupCount_ = shape.groupCount;
  partitionTotal_ = shape.partitionTotal;
  matroidCount_ = shape.matroidCount;
  matroidCountExact_ = shape.exact;
  beta_ = n > 0 ? params_.delta * capacity_ / Cost(n) : capacity_;

  powers_.reserve(static_cast<size_t>(groupCount_) + 1);
  powers_.push_back(Cost(1));
  for (int k = 1; k <= groupCount_; ++k) {
    powers_.push_back(powers_.back() * (Cost(1) + params_.delta));
  }

  for (const Cost& w : weights_) {
    if (capacity_ < w) {
      hasOversize_ = true;
      break;
    }
  }
  groups_.assign(static_cast<size_t>(groupCount_) + 1 + (hasOversize_ ? 1 : 0), {});
  groupOf_.assign(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    const Cost& w = weights_[static_cast<size_t>(i)];
    int group;
    if (capacity_ < w) {
      group = groupCount_ + 1;
    } else if (!(beta_ < w)) {
      group = 0;
    } else {
      group = 1;
      while (beta_ * powers_[static_cast<size_t>(group)] < w) ++group;
    }
    groupOf_[static_cast<size_t>(i)] = group;
    groups_[static_cast<size_t>(group)].push_back(i);
  }
}

Cost KnapsackPartitionReduction::weightBound() const {
  return (Cost(1) + epsilonEffective()) * capacity_;
}

int KnapsackPartitionReduction::boundFor(int group, int quota) const {
  // floor(n * (quota + 1) / (G * (1 + delta)^(group - 1)))
  Cost value = Cost(groundSize()) * Cost(quota + 1) /
               (Cost(groupCount_) * powers_[static_cast<size_t>(group - 1)]);
  return static_cast<int>(value.floorToInt());
}

PartitionMatroid KnapsackPartitionReduction::matroidFor(const std::vector<int>& composition) const {
  if (static_cast<int>(composition.size()) != groupCount_) {
    throw PreconditionError("composition length must equal the group count");
  }
  std::vector<int> bounds;
  bounds.reserve(groups_.size());
  bounds.push_back(PartitionMatroid::kUnbounded);  // small-weight group
  for (int k = 1; k <= groupCount_; ++k) {
    bounds.push_back(boundFor(k, composition[static_cast<size_t>(k - 1)]));
  }
  if (hasOversize_) bounds.push_back(0);
  return PartitionMatroid(groups_, bounds);
}

void KnapsackPartitionReduction::forEachComposition(
    const std::function<void(const std::vector<int>&)>& visit) const {
  if (!matroidCountExact_ || matroidCount_ > params_.enumerationCap) {
    throw EnumerationCapExceeded(
        "the matroid family has " +
        (matroidCountExact_ ? std::to_string(matroidCount_) : std::string("more than 2^64")) +
        " members; the enumeration cap is " + std::to_string(params_.enumerationCap) +
        " (raise the cap or use a larger delta)");
  }
  if (groupCount_ == 0) {
    visit({});
    return;
  }
  std::vector<int> composition(static_cast<size_t>(groupCount_), 0);
  // Ascending lexicographic order: earlier groups advance slowest.
  auto recurse = [&](auto&& self, int position, int remaining) -> void {
    if (position == groupCount_ - 1) {
      composition[static_cast<size_t>(position)] = remaining;
      visit(composition);
      return;
    }
    for (int value = 0; value <= remaining; ++value) {
      composition[static_cast<size_t>(position)] = value;
      self(self, position + 1, remaining - value);
    }
  };
  recurse(recurse, 0, partitionTotal_);
}

std::vector<int> KnapsackPartitionReduction::locate(const IndexSet& feasibleSet) const {
  Cost total(0);
  for (int i : feasibleSet) {
    if (i < 0 || i >= groundSize()) throw PreconditionError("located set index out of range");
    total += weights_[static_cast<size_t>(i)];
  }
  if (capacity_ < total) {
    throw PreconditionError("locate expects a set within the knapsack capacity");
  }
  std::vector<int> composition(static_cast<size_t>(groupCount_), 0);
  int assigned = 0;
  for (int k = 1; k <= groupCount_; ++k) {
    Cost groupWeight(0);
    for (int i : feasibleSet) {
      if (groupOf(i) == k) groupWeight += weights_[static_cast<size_t>(i)];
    }
    // Quota: the unique integer with quota * delta*B/G <= weight.
    Cost quota = groupWeight * Cost(groupCount_) / (params_.delta * capacity_);
    composition[static_cast<size_t>(k - 1)] = static_cast<int>(quota.floorToInt());
    assigned += composition[static_cast<size_t>(k - 1)];
  }
  if (groupCount_ > 0) composition[0] += partitionTotal_ - assigned;  // pad slack into the first group
  return composition;
}

bool KnapsackPartitionReduction::memberOfAny(const IndexSet& set) const {
  for (int i : set) {
    if (i < 0 || i >= groundSize()) return false;
    if (groupOf(i) == groupCount_ + 1) return false;  // oversize never fits
  }
  // Sum the smallest quota each group needs; some composition works iff
  // the total fits into partitionTotal().
  long long needed = 0;
  for (int k = 1; k <= groupCount_; ++k) {
    int members = 0;
    for (int i : set) {
      if (groupOf(i) == k) ++members;
    }
    if (members == 0) continue;
    // Smallest quota with floor(n*(quota+1)/(G*(1+delta)^(k-1))) >= members.
    Cost threshold = Cost(members) * Cost(groupCount_) * powers_[static_cast<size_t>(k - 1)] /
                         Cost(groundSize()) -
                     Cost(1);
    std::int64_t quota = threshold.ceilToInt();
    if (quota < 0) quota = 0;
    needed += quota;
    if (needed > partitionTotal_) return false;
  }
  return needed <= partitionTotal_;
}

Cost KnapsackPartitionReduction::chooseDelta(int groundSize, std::uint64_t cap) {
  static const Cost grid[] = {Cost(1, 12), Cost(1, 10), Cost(1, 8), Cost(1, 6), Cost(1, 5),
                              Cost(1, 4),  Cost(1, 3),  Cost(1, 2), Cost(2, 3), Cost(1)};
  for (const Cost& delta : grid) {
    try {
      ReductionShape shape = computeShape(groundSize, delta);
      if (shape.exact && shape.matroidCount <= cap) return delta;
    } catch (const ArithmeticOverflow&) {
      // group powers left the exact range; the family is far over any cap
    }
  }
  return Cost(1);
}

std::vector<Scenario> splitScenario(const Scenario& scenario, const KnapsackSet& normalized,
                                    const Cost& epsilon) {
  if (!normalized.normalized()) {
    throw PreconditionError("split expects a normalized knapsack");
  }
  if (epsilon <= Cost(0)) throw PreconditionError("split epsilon must be positive");
  const int q = normalized.constraintCount();
  Cost combined(0);
  for (int i : scenario) {
    if (!normalized.contains({i})) {
      throw PreconditionError("split expects every singleton to be knapsack-feasible");
    }
    for (int j = 0; j < q; ++j) combined += normalized.weights(j)[static_cast<size_t>(i)];
  }
  if ((Cost(1) + epsilon) * Cost(q) < combined) {
    throw PreconditionError("split expects combined weight within the relaxed capacity");
  }

  std::vector<Scenario> parts;
  parts.reserve(scenario.size());
  for (int i : scenario) parts.push_back({i});
  for (bool merged = true; merged;) {
    merged = false;
    for (size_t a = 0; a < parts.size() && !merged; ++a) {
      for (size_t b = a + 1; b < parts.size() && !merged; ++b) {
        Scenario candidate = setUnion(parts[a], parts[b]);
        if (normalized.contains(candidate)) {
          parts[a] = std::move(candidate);
          parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(b));
          merged = true;
        }
      }
    }
  }
  return parts;
}

int splitPartBound(const Cost& epsilon, int q) {
  return static_cast<int>(((Cost(2) * (Cost(1) + epsilon)) * Cost(q)).floorToInt()) + 1;
}

MaxMinKnapsackResult maxminSystemKnapsack(const CoveringProblem& problem,
                                          std::shared_ptr<const IndependenceSystem> system,
                                          const KnapsackSet& knapsack,
                                          const ReductionParams& params,
                                          PartSelection selection, std::uint64_t seed) {
  if (!system) throw PreconditionError("max-min needs a system");
  if (system->groundSize() != problem.numRequirements() ||
      knapsack.groundSize() != problem.numRequirements()) {
    throw PreconditionError("system and knapsack must range over the requirements");
  }

  NormalizedKnapsack normalized = normalizeKnapsacks(knapsack);
  SingleKnapsack combined = combineKnapsacks(normalized.set);
  // A dropped index can never be in a feasible scenario; an over-capacity
  // combined weight forces it into the reduction's oversize group.
  for (int i : normalized.dropped) {
    combined.weights[static_cast<size_t>(i)] = combined.capacity + Cost(1);
  }
  KnapsackPartitionReduction reduction(std::move(combined.weights), combined.capacity, params);

  MaxMinKnapsackResult result;
  result.deltaUsed = reduction.delta();
  result.weightBound = reduction.weightBound();
  result.matroidCount = reduction.matroidCount();
  result.partBound = splitPartBound(reduction.epsilonEffective(), knapsack.constraintCount());

  bool found = false;
  std::uint64_t index = 0;
  reduction.forEachComposition([&](const std::vector<int>& composition) {
    auto matroid = std::make_shared<PartitionMatroid>(reduction.matroidFor(composition));
    IntersectionSystem sigma({system, matroid});
    MaxMinGreedyResult greedy = maxminGreedy(problem, sigma);
    if (!found || result.onlineCost < greedy.onlineCostAfter) {
      found = true;
      result.onlineCost = greedy.onlineCostAfter;
      result.matroidScenario = greedy.scenario;
      result.matroidFeedOrder = greedy.feedOrder();
      result.chosenMatroid = index;
      result.chosenComposition = composition;
    }
    ++index;
  });

  result.certifiedUpperBound = Cost(system->pValue() + 2) * result.onlineCost;
  result.parts =
      splitScenario(result.matroidScenario, normalized.set, reduction.epsilonEffective());
  if (result.parts.empty()) {
    result.scenario = {};
    return result;
  }
  size_t chosen = 0;
  if (selection == PartSelection::Deterministic) {
    Cost bestValue(0);
    for (size_t i = 0; i < result.parts.size(); ++i) {
      Cost value = problem.setCost(problem.offlineAugment(result.parts[i], {}));
      if (i == 0 || bestValue < value) {
        bestValue = value;
        chosen = i;
      }
    }
  } else {
    DeterministicRng rng(seed);
    chosen = static_cast<size_t>(rng.uniformInt(0, static_cast<int>(result.parts.size()) - 1));
  }
  result.scenario = result.parts[chosen];
  return result;
}

}  // namespace robustcover
