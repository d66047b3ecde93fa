#include "robustcover/independence.hpp"

#include <numeric>

#include "robustcover/errors.hpp"

namespace robustcover {

namespace {

/// Union-find over a fixed vertex range.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int v) {
    while (parent_[static_cast<size_t>(v)] != v) {
      parent_[static_cast<size_t>(v)] = parent_[static_cast<size_t>(parent_[static_cast<size_t>(v)])];
      v = parent_[static_cast<size_t>(v)];
    }
    return v;
  }

  /// False when u and v were already connected.
  bool unite(int u, int v) {
    int ru = find(u), rv = find(v);
    if (ru == rv) return false;
    parent_[static_cast<size_t>(ru)] = rv;
    return true;
  }

 private:
  std::vector<int> parent_;
};

bool inRange(const IndexSet& set, int n) {
  for (int i : set) {
    if (i < 0 || i >= n) return false;
  }
  return true;
}

}  // namespace

bool IndependenceSystem::canExtend(const IndexSet& base, int extra) const {
  IndexSet candidate = base;
  insertIndex(candidate, extra);
  return contains(candidate);
}

UniformMatroid::UniformMatroid(int groundSize, int bound)
    : groundSize_(groundSize), bound_(bound) {
  if (groundSize < 0 || bound < 0) throw PreconditionError("uniform matroid needs n >= 0 and k >= 0");
}

bool UniformMatroid::contains(const IndexSet& set) const {
  return inRange(set, groundSize_) && static_cast<int>(set.size()) <= bound_;
}

std::string UniformMatroid::describe() const {
  return "uniform(k=" + std::to_string(bound_) + ")";
}

PartitionMatroid::PartitionMatroid(std::vector<IndexSet> parts, std::vector<int> bounds)
    : parts_(std::move(parts)), bounds_(std::move(bounds)) {
  if (parts_.size() != bounds_.size()) {
    throw PreconditionError("partition matroid needs one bound per part");
  }
  int n = 0;
  for (const IndexSet& part : parts_) n += static_cast<int>(part.size());
  groundSize_ = n;
  partOf_.assign(static_cast<size_t>(n), -1);
  for (size_t k = 0; k < parts_.size(); ++k) {
    std::sort(parts_[k].begin(), parts_[k].end());
    if (std::adjacent_find(parts_[k].begin(), parts_[k].end()) != parts_[k].end()) {
      throw PreconditionError("partition matroid part repeats an index");
    }
    for (int i : parts_[k]) {
      if (i < 0 || i >= n || partOf_[static_cast<size_t>(i)] != -1) {
        throw PreconditionError("partition matroid parts must be disjoint and cover [0, n)");
      }
      partOf_[static_cast<size_t>(i)] = static_cast<int>(k);
    }
    if (bounds_[k] < 0 && bounds_[k] != kUnbounded) {
      throw PreconditionError("partition matroid bounds must be nonnegative or unbounded");
    }
  }
}

bool PartitionMatroid::contains(const IndexSet& set) const {
  if (!inRange(set, groundSize_)) return false;
  std::vector<int> counts(parts_.size(), 0);
  for (int i : set) ++counts[static_cast<size_t>(partOf_[static_cast<size_t>(i)])];
  for (size_t k = 0; k < parts_.size(); ++k) {
    if (bounds_[k] != kUnbounded && counts[k] > bounds_[k]) return false;
  }
  return true;
}

std::string PartitionMatroid::describe() const {
  return "partition(" + std::to_string(parts_.size()) + " parts)";
}

GraphicMatroid::GraphicMatroid(int vertexCount, std::vector<std::pair<int, int>> edges)
    : vertexCount_(vertexCount), edges_(std::move(edges)) {
  for (const auto& [u, v] : edges_) {
    if (u < 0 || u >= vertexCount_ || v < 0 || v >= vertexCount_) {
      throw PreconditionError("graphic matroid edge endpoint out of range");
    }
  }
}

bool GraphicMatroid::contains(const IndexSet& set) const {
  if (!inRange(set, groundSize())) return false;
  DisjointSets components(vertexCount_);
  for (int e : set) {
    const auto& [u, v] = edges_[static_cast<size_t>(e)];
    if (u == v) return false;  // a self-loop is a cycle
    if (!components.unite(u, v)) return false;
  }
  return true;
}

std::string GraphicMatroid::describe() const {
  return "graphic(" + std::to_string(vertexCount_) + " vertices)";
}

IntersectionSystem::IntersectionSystem(
    std::vector<std::shared_ptr<const IndependenceSystem>> members)
    : members_(std::move(members)) {
  if (members_.empty()) throw PreconditionError("intersection needs at least one member");
  groundSize_ = members_.front()->groundSize();
  for (const auto& m : members_) {
    if (!m) throw PreconditionError("intersection member is null");
    if (m->groundSize() != groundSize_) {
      throw PreconditionError("intersection members must share a ground set");
    }
  }
}

bool IntersectionSystem::contains(const IndexSet& set) const {
  for (const auto& m : members_) {
    if (!m->contains(set)) return false;
  }
  return true;
}

int IntersectionSystem::pValue() const {
  int p = 0;
  for (const auto& m : members_) p += m->pValue();
  return p;
}

std::string IntersectionSystem::describe() const {
  std::string out = "intersection(";
  for (size_t i = 0; i < members_.size(); ++i) {
    if (i > 0) out += " & ";
    out += members_[i]->describe();
  }
  return out + ")";
}

ExplicitFamily::ExplicitFamily(int groundSize, std::vector<IndexSet> maximalSets,
                               std::optional<int> declaredP)
    : groundSize_(groundSize), pValue_(declaredP) {
  for (IndexSet& s : maximalSets) {
    s = normalizedIndexSet(std::move(s));
    if (!inRange(s, groundSize_)) {
      throw PreconditionError("explicit family member index out of range");
    }
  }
  std::sort(maximalSets.begin(), maximalSets.end());
  maximalSets.erase(std::unique(maximalSets.begin(), maximalSets.end()), maximalSets.end());
  maximalSets_ = std::move(maximalSets);
  if (!pValue_ && groundSize_ <= 12) {
    pValue_ = smallestPSystemValue(*this);
  }
}

bool ExplicitFamily::contains(const IndexSet& set) const {
  if (!inRange(set, groundSize_)) return false;
  if (set.empty()) return true;
  for (const IndexSet& maximal : maximalSets_) {
    if (isSubsetOf(set, maximal)) return true;
  }
  return false;
}

int ExplicitFamily::pValue() const {
  if (!pValue_) {
    throw PreconditionError(
        "explicit family over more than 12 indices needs a declared p value");
  }
  return *pValue_;
}

std::string ExplicitFamily::describe() const {
  return "explicit(" + std::to_string(maximalSets_.size()) + " maximal sets)";
}

int smallestPSystemValue(int groundSize,
                         const std::function<bool(const IndexSet&)>& contains) {
  if (groundSize < 0 || groundSize > 20) {
    throw PreconditionError("p-system scan is exhaustive; ground size must be <= 20");
  }
  const std::uint32_t full = groundSize >= 32 ? ~0u : ((1u << groundSize) - 1u);
  std::vector<char> independent(static_cast<size_t>(full) + 1, 0);
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    independent[mask] = contains(fromMask(mask)) ? 1 : 0;
    if (full == 0) break;
  }
  int p = 1;
  for (std::uint32_t ambient = 0; ambient <= full; ++ambient) {
    int minSize = -1, maxSize = -1;
    // Walk the independent subsets of `ambient` that are maximal within it.
    std::uint32_t sub = ambient;
    for (;;) {
      if (independent[sub]) {
        bool maximal = true;
        std::uint32_t outside = ambient & ~sub;
        while (outside != 0) {
          std::uint32_t bit = outside & (~outside + 1);
          if (independent[sub | bit]) {
            maximal = false;
            break;
          }
          outside ^= bit;
        }
        if (maximal) {
          int size = __builtin_popcount(sub);
          if (minSize < 0 || size < minSize) minSize = size;
          if (size > maxSize) maxSize = size;
        }
      }
      if (sub == 0) break;
      sub = (sub - 1) & ambient;
    }
    if (minSize > 0) {
      int needed = (maxSize + minSize - 1) / minSize;  // ceil(max/min)
      if (needed > p) p = needed;
    }
    if (ambient == full) break;
  }
  return p;
}

int smallestPSystemValue(const IndependenceSystem& system) {
  return smallestPSystemValue(system.groundSize(),
                              [&system](const IndexSet& s) { return system.contains(s); });
}

}  // namespace robustcover
