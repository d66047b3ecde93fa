#pragma once

#include <cstdint>
#include <random>

#include "robustcover/cost.hpp"

namespace robustcover {

/// Seeded mt19937_64 with hand-rolled uniform draws. The standard
/// distributions are implementation-defined, so golden files and the
/// byte-identical-output guarantee go through this instead.
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi] via rejection sampling.
  int uniformInt(int lo, int hi) {
    if (hi < lo) return lo;
    std::uint64_t range = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
    std::uint64_t draw;
    do {
      draw = engine_();
    } while (draw >= limit);
    return lo + static_cast<int>(draw % range);
  }

  bool chancePercent(int percent) { return uniformInt(0, 99) < percent; }

  /// Uniform k/100 with k in [1, 100].
  Cost uniformCost() { return Cost(uniformInt(1, 100), 100); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace robustcover
