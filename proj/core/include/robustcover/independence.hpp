#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "robustcover/sets.hpp"

namespace robustcover {

/// Downward-closed family over requirement indices [0, n) with a
/// membership oracle and a declared p-value. Membership of sets with
/// out-of-range indices is false.
///
/// p is declared, not verified: deciding the exact ratio is itself hard.
/// smallestPSystemValue() checks a declaration exhaustively on tiny
/// ground sets.
class IndependenceSystem {
 public:
  virtual ~IndependenceSystem() = default;

  virtual int groundSize() const = 0;
  virtual bool contains(const IndexSet& set) const = 0;
  virtual int pValue() const = 0;
  virtual std::string describe() const = 0;

  /// contains(base ∪ {extra}); `base` must already be a member.
  bool canExtend(const IndexSet& base, int extra) const;
};

/// All subsets of size at most k.
class UniformMatroid final : public IndependenceSystem {
 public:
  UniformMatroid(int groundSize, int bound);

  int bound() const { return bound_; }
  int groundSize() const override { return groundSize_; }
  bool contains(const IndexSet& set) const override;
  int pValue() const override { return 1; }
  std::string describe() const override;

 private:
  int groundSize_;
  int bound_;
};

/// Per-part cardinality caps over a fixed partition of [0, n).
class PartitionMatroid final : public IndependenceSystem {
 public:
  static constexpr int kUnbounded = -1;

  /// `parts` must be disjoint and cover [0, n); a bound of kUnbounded
  /// places no cap on its part.
  PartitionMatroid(std::vector<IndexSet> parts, std::vector<int> bounds);

  const std::vector<IndexSet>& parts() const { return parts_; }
  const std::vector<int>& bounds() const { return bounds_; }

  int groundSize() const override { return groundSize_; }
  bool contains(const IndexSet& set) const override;
  int pValue() const override { return 1; }
  std::string describe() const override;

 private:
  std::vector<IndexSet> parts_;
  std::vector<int> bounds_;
  std::vector<int> partOf_;
  int groundSize_;
};

/// Requirements are the edges of a graph; independent sets are forests.
class GraphicMatroid final : public IndependenceSystem {
 public:
  GraphicMatroid(int vertexCount, std::vector<std::pair<int, int>> edges);

  int vertexCount() const { return vertexCount_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  int groundSize() const override { return static_cast<int>(edges_.size()); }
  bool contains(const IndexSet& set) const override;
  int pValue() const override { return 1; }
  std::string describe() const override;

 private:
  int vertexCount_;
  std::vector<std::pair<int, int>> edges_;
};

/// Intersection of member systems; declared p is the sum of the members'
/// p-values (an intersection of p matroids is a p-system).
class IntersectionSystem final : public IndependenceSystem {
 public:
  explicit IntersectionSystem(std::vector<std::shared_ptr<const IndependenceSystem>> members);

  const std::vector<std::shared_ptr<const IndependenceSystem>>& members() const { return members_; }

  int groundSize() const override { return groundSize_; }
  bool contains(const IndexSet& set) const override;
  int pValue() const override;
  std::string describe() const override;

 private:
  std::vector<std::shared_ptr<const IndependenceSystem>> members_;
  int groundSize_;
};

/// Family listed by its maximal sets; downward closure is implied and
/// membership is a subset test against each maximal set.
///
/// When no p is declared, the smallest valid p is computed exhaustively
/// at construction for ground sets of at most 12 indices; larger families
/// must declare p before pValue() is usable.
class ExplicitFamily final : public IndependenceSystem {
 public:
  ExplicitFamily(int groundSize, std::vector<IndexSet> maximalSets,
                 std::optional<int> declaredP = std::nullopt);

  const std::vector<IndexSet>& maximalSets() const { return maximalSets_; }

  int groundSize() const override { return groundSize_; }
  bool contains(const IndexSet& set) const override;
  int pValue() const override;
  std::string describe() const override;

 private:
  int groundSize_;
  std::vector<IndexSet> maximalSets_;
  std::optional<int> pValue_;
};

/// Smallest integer p such that within every ground subset the sizes of
/// maximal independent sets differ by at most a factor p. Exhaustive over
/// all 3^n (subset, member) pairs; callers keep n small.
int smallestPSystemValue(int groundSize, const std::function<bool(const IndexSet&)>& contains);
int smallestPSystemValue(const IndependenceSystem& system);

}  // namespace robustcover
