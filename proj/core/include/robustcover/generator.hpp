#pragma once

#include <cstdint>
#include <string>

#include "robustcover/instance.hpp"

namespace robustcover {

/// Deterministic random-instance recipe; the seed fully determines the
/// generated instance.
struct GeneratorSpec {
  std::string family = "setcover";  // setcover | steiner
  int requirements = 6;             // items / terminals
  int elements = 8;                 // sets / edge budget
  int vertices = 0;                 // steiner only; 0 derives requirements + 2
  std::uint64_t seed = 1;
  int coverPercent = 40;  // chance a set contains an item
  int edgePercent = 40;   // chance an extra edge is added

  // uniform | partition | intersect2 | knapsack | and | explicit
  std::string uncertainty = "uniform";
  int uniformBound = 2;
  int partitionParts = 2;
  int knapsackConstraints = 1;
  int explicitScenarios = 3;

  Cost lambda{1};
};

RobustInstance generateInstance(const GeneratorSpec& spec);

}  // namespace robustcover
