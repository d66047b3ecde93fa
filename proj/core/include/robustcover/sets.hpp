#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace robustcover {

/// Sorted, duplicate-free list of nonnegative indices. Used both for
/// requirement scenarios and for element subsets.
using IndexSet = std::vector<int>;

/// A scenario is a subset of the requirement indices [0, n).
using Scenario = IndexSet;

inline IndexSet normalizedIndexSet(IndexSet values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

inline bool setContains(const IndexSet& set, int value) {
  return std::binary_search(set.begin(), set.end(), value);
}

inline bool isSubsetOf(const IndexSet& inner, const IndexSet& outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

inline void insertIndex(IndexSet& set, int value) {
  auto it = std::lower_bound(set.begin(), set.end(), value);
  if (it == set.end() || *it != value) set.insert(it, value);
}

inline IndexSet setUnion(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline IndexSet setDifference(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline IndexSet setIntersection(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline IndexSet indexRange(int n) {
  IndexSet out(static_cast<size_t>(n > 0 ? n : 0));
  for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = i;
  return out;
}

inline bool lexSmaller(const IndexSet& a, const IndexSet& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline std::uint32_t toMask(const IndexSet& set) {
  std::uint32_t mask = 0;
  for (int i : set) mask |= (std::uint32_t{1} << i);
  return mask;
}

inline IndexSet fromMask(std::uint32_t mask) {
  IndexSet out;
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1u) out.push_back(i);
  }
  return out;
}

inline std::string formatIndexSet(const IndexSet& set) {
  std::string out = "{";
  for (size_t i = 0; i < set.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(set[i]);
  }
  out += "}";
  return out;
}

}  // namespace robustcover
