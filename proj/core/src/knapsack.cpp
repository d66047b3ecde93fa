#include "robustcover/knapsack.hpp"

#include "robustcover/errors.hpp"

namespace robustcover {

KnapsackSet::KnapsackSet(std::vector<std::vector<Cost>> weights, std::vector<Cost> capacities)
    : weights_(std::move(weights)), capacities_(std::move(capacities)) {
  if (weights_.empty() || weights_.size() != capacities_.size()) {
    throw PreconditionError("knapsack needs matching weight vectors and capacities");
  }
  groundSize_ = static_cast<int>(weights_.front().size());
  for (const auto& w : weights_) {
    if (static_cast<int>(w.size()) != groundSize_) {
      throw PreconditionError("knapsack weight vectors must share one length");
    }
    for (const Cost& value : w) {
      if (value.isNegative()) throw PreconditionError("knapsack weights must be nonnegative");
    }
  }
  for (const Cost& b : capacities_) {
    if (b.isNegative()) throw PreconditionError("knapsack capacities must be nonnegative");
  }
}

const std::vector<Cost>& KnapsackSet::weights(int constraint) const {
  return weights_.at(static_cast<size_t>(constraint));
}

const Cost& KnapsackSet::capacity(int constraint) const {
  return capacities_.at(static_cast<size_t>(constraint));
}

Cost KnapsackSet::constraintWeight(int constraint, const IndexSet& set) const {
  const auto& w = weights(constraint);
  Cost total(0);
  for (int i : set) total += w[static_cast<size_t>(i)];
  return total;
}

bool KnapsackSet::contains(const IndexSet& set) const {
  for (int i : set) {
    if (i < 0 || i >= groundSize_) return false;
  }
  for (int j = 0; j < constraintCount(); ++j) {
    if (constraintWeight(j, set) > capacities_[static_cast<size_t>(j)]) return false;
  }
  return true;
}

bool KnapsackSet::normalized() const {
  for (const Cost& b : capacities_) {
    if (b != Cost(1)) return false;
  }
  return true;
}

NormalizedKnapsack normalizeKnapsacks(const KnapsackSet& knapsack) {
  std::vector<std::vector<Cost>> scaled;
  scaled.reserve(static_cast<size_t>(knapsack.constraintCount()));
  for (int j = 0; j < knapsack.constraintCount(); ++j) {
    const Cost& b = knapsack.capacity(j);
    if (!(Cost(0) < b)) throw PreconditionError("normalization needs positive capacities");
    std::vector<Cost> w = knapsack.weights(j);
    for (Cost& value : w) value /= b;
    scaled.push_back(std::move(w));
  }
  IndexSet dropped;
  for (int i = 0; i < knapsack.groundSize(); ++i) {
    for (const auto& w : scaled) {
      if (w[static_cast<size_t>(i)] > Cost(1)) {
        dropped.push_back(i);
        break;
      }
    }
  }
  std::vector<Cost> ones(static_cast<size_t>(knapsack.constraintCount()), Cost(1));
  return {KnapsackSet(std::move(scaled), std::move(ones)), std::move(dropped)};
}

SingleKnapsack combineKnapsacks(const KnapsackSet& normalized) {
  if (!normalized.normalized()) {
    throw PreconditionError("combine expects a normalized knapsack (all capacities one)");
  }
  std::vector<Cost> combined(static_cast<size_t>(normalized.groundSize()), Cost(0));
  for (int j = 0; j < normalized.constraintCount(); ++j) {
    const auto& w = normalized.weights(j);
    for (size_t i = 0; i < combined.size(); ++i) combined[i] += w[i];
  }
  return {std::move(combined), Cost(normalized.constraintCount())};
}

KnapsackSystemView::KnapsackSystemView(KnapsackSet knapsack, int declaredP)
    : knapsack_(std::move(knapsack)), declaredP_(declaredP) {
  if (declaredP_ < 1) throw PreconditionError("declared p must be positive");
}

std::string KnapsackSystemView::describe() const {
  return "knapsack(q=" + std::to_string(knapsack_.constraintCount()) + ")";
}

}  // namespace robustcover
