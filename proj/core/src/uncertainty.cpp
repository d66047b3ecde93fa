#include "robustcover/uncertainty.hpp"

#include "robustcover/errors.hpp"

namespace robustcover {

UncertaintySet UncertaintySet::ofSystem(std::shared_ptr<const IndependenceSystem> system) {
  if (!system) throw PreconditionError("uncertainty needs a system");
  UncertaintySet u;
  u.kind = UncertaintyKind::System;
  u.system = std::move(system);
  return u;
}

UncertaintySet UncertaintySet::ofSystemAndKnapsack(
    std::shared_ptr<const IndependenceSystem> system,
    std::shared_ptr<const KnapsackSet> knapsack) {
  if (!system || !knapsack) throw PreconditionError("uncertainty needs a system and a knapsack");
  if (system->groundSize() != knapsack->groundSize()) {
    throw PreconditionError("system and knapsack must share a ground set");
  }
  UncertaintySet u;
  u.kind = UncertaintyKind::SystemAndKnapsack;
  u.system = std::move(system);
  u.knapsack = std::move(knapsack);
  return u;
}

UncertaintySet UncertaintySet::ofScenarios(int groundSize, std::vector<Scenario> scenarios) {
  for (Scenario& s : scenarios) s = normalizedIndexSet(std::move(s));
  UncertaintySet u;
  u.kind = UncertaintyKind::ExplicitScenarios;
  u.system = std::make_shared<ExplicitFamily>(groundSize, scenarios);
  u.explicitScenarios = std::move(scenarios);
  return u;
}

bool UncertaintySet::contains(const Scenario& scenario) const {
  if (!system->contains(scenario)) return false;
  if (kind == UncertaintyKind::SystemAndKnapsack && !knapsack->contains(scenario)) return false;
  return true;
}

}  // namespace robustcover
