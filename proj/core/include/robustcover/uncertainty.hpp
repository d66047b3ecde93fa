#pragma once

#include <memory>
#include <vector>

#include "robustcover/independence.hpp"
#include "robustcover/knapsack.hpp"
#include "robustcover/sets.hpp"

namespace robustcover {

enum class UncertaintyKind {
  System,             // a downward-closed system (matroids, intersections, ...)
  SystemAndKnapsack,  // system membership and q-knapsack feasibility
  ExplicitScenarios,  // listed maximal scenarios, downward closure implied
};

/// Runtime view of an uncertainty set over the requirement indices.
struct UncertaintySet {
  UncertaintyKind kind = UncertaintyKind::System;
  std::shared_ptr<const IndependenceSystem> system;  // always set
  std::shared_ptr<const KnapsackSet> knapsack;       // SystemAndKnapsack only
  std::vector<Scenario> explicitScenarios;           // ExplicitScenarios only

  static UncertaintySet ofSystem(std::shared_ptr<const IndependenceSystem> system);
  static UncertaintySet ofSystemAndKnapsack(std::shared_ptr<const IndependenceSystem> system,
                                            std::shared_ptr<const KnapsackSet> knapsack);
  static UncertaintySet ofScenarios(int groundSize, std::vector<Scenario> scenarios);

  int groundSize() const { return system->groundSize(); }
  bool contains(const Scenario& scenario) const;
  int pValue() const { return system->pValue(); }
};

}  // namespace robustcover
