#include "doctest.h"

#include "robustcover/generator.hpp"
#include "robustcover/oracle.hpp"
#include "robustcover/robust.hpp"
#include "robustcover/setcover.hpp"
#include "robustcover/solve.hpp"

using namespace robustcover;

namespace {

RobustParams oracleParams(const ExactOracle& oracle) {
  RobustParams params;
  params.onlineFactor = oracle.onlineRatioBound();
  params.offlineFactor = oracle.offlineRatioBound();
  return params;
}

void checkDiscriminating(const RobustInstance& instance, const ExactOracle& oracle,
                         const DiscriminatingOutput& output) {
  const Cost budget = output.factors.beta * output.threshold;
  for (const Scenario& scenario : oracle.enumerateScenarios(instance.uncertainty)) {
    IndexSet augmentation = output.augment(scenario);
    CHECK(instance.problem->satisfiesAll(scenario,
                                         setUnion(output.firstStage, augmentation)));
    CHECK(instance.problem->setCost(augmentation) <= budget);
  }
}

}  // namespace

TEST_CASE("a huge threshold exits immediately with an empty first stage") {
  SetCoverProblem problem(3, {Cost(1), Cost(1)}, {{0, 1}, {2}});
  auto omega = std::make_shared<UniformMatroid>(3, 2);
  Cost total = problem.setCost(indexRange(problem.numElements()));
  DiscriminatingOutput output = robustPSystem(problem, omega, total);
  CHECK(output.iterations.size() == 1);
  CHECK(output.firstStage.empty());
  CHECK(output.firstStageCost == Cost(0));
}

TEST_CASE("threshold zero still covers every scenario, for free") {
  GeneratorSpec spec;
  spec.requirements = 5;
  spec.elements = 6;
  spec.seed = 12;
  RobustInstance instance = generateInstance(spec);
  ExactOracle oracle(*instance.problem);
  RobustParams params = oracleParams(oracle);
  DiscriminatingOutput output =
      robustPSystem(*instance.problem, instance.uncertainty.system, Cost(0), params);
  checkDiscriminating(instance, oracle, output);  // budget is beta * 0 = 0
}

TEST_CASE("the empty uncertainty set yields the zero solution") {
  SetCoverProblem problem(3, {Cost(1), Cost(1)}, {{0, 1}, {2}});
  auto nothing = std::make_shared<UniformMatroid>(3, 0);
  DiscriminatingOutput output = robustPSystem(problem, nothing, Cost(1));
  CHECK(output.firstStage.empty());
  CHECK(output.augment({}).empty());
}

TEST_CASE("per-iteration scenario certificate and monotone online state") {
  GeneratorSpec spec;
  spec.requirements = 5;
  spec.elements = 7;
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    spec.seed = seed;
    spec.family = seed % 2 == 0 ? "steiner" : "setcover";
    spec.uncertainty = seed % 3 == 0 ? "partition" : "uniform";
    RobustInstance instance = generateInstance(spec);
    ExactOracle oracle(*instance.problem);
    RobustParams params = oracleParams(oracle);
    const int p = instance.uncertainty.pValue();
    std::vector<Scenario> all = oracle.enumerateScenarios(instance.uncertainty);
    for (const Cost& threshold : {Cost(0), Cost(1, 2), Cost(2)}) {
      DiscriminatingOutput output =
          robustPSystem(*instance.problem, instance.uncertainty.system, threshold, params);
      IndexSet previous;
      for (const RobustIteration& iteration : output.iterations) {
        CHECK(isSubsetOf(previous, iteration.firstStageBefore));
        previous = iteration.firstStageBefore;
        const Cost marginal = iteration.onlineAfter - iteration.onlineBefore;
        for (const Scenario& b : all) {
          CHECK(oracle.optAug(b, iteration.firstStageBefore).cost <= Cost(p + 1) * marginal);
        }
      }
    }
  }
}

TEST_CASE("first stage is bounded once the threshold reaches the optimum") {
  GeneratorSpec spec;
  spec.requirements = 4;
  spec.elements = 6;
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    spec.seed = seed;
    spec.uncertainty = seed % 2 == 0 ? "uniform" : "partition";
    RobustInstance instance = generateInstance(spec);
    instance.lambda = Cost(2);
    ExactOracle oracle(*instance.problem);
    RobustParams params = oracleParams(oracle);
    ExactRobust exact = oracle.robust(instance.uncertainty, instance.lambda);
    for (const Cost& threshold :
         {exact.secondStageCost, exact.secondStageCost + Cost(1, 2),
          Cost(2) * exact.secondStageCost + Cost(1)}) {
      DiscriminatingOutput output =
          robustPSystem(*instance.problem, instance.uncertainty.system, threshold, params);
      CHECK(output.firstStageCost <= Cost(2) * params.onlineFactor * exact.firstStageCost);
      checkDiscriminating(instance, oracle, output);
    }
  }
}

TEST_CASE("the generic loop accepts any scenario oracle") {
  SetCoverProblem problem(3, {Cost(1), Cost(2, 5), Cost(1)}, {{0, 1}, {1}, {2}});
  ExactOracle oracle(problem);
  auto omega = std::make_shared<UniformMatroid>(3, 2);
  UncertaintySet uncertainty = UncertaintySet::ofSystem(omega);

  // Exact max-min oracle relative to the current online solution.
  ScenarioPicker exactPicker = [&](OnlineRun& run) -> std::vector<int> {
    Scenario best;
    Cost bestValue(0);
    for (const Scenario& s : oracle.enumerateScenarios(uncertainty)) {
      Cost value = oracle.optAug(s, run.ownedElements()).cost;
      if (bestValue < value) {
        bestValue = value;
        best = s;
      }
    }
    for (int i : best) run.feed(i);
    return best;
  };

  RobustParams params;
  params.onlineFactor = oracle.onlineRatioBound();
  params.offlineFactor = oracle.offlineRatioBound();
  for (const Cost& threshold : {Cost(0), Cost(1, 2), Cost(2)}) {
    DiscriminatingOutput output =
        robustGeneric(problem, threshold, exactPicker, Cost(1), params);
    const Cost budget = output.factors.beta * threshold;
    for (const Scenario& s : oracle.enumerateScenarios(uncertainty)) {
      IndexSet augmentation = output.augment(s);
      CHECK(problem.satisfiesAll(s, setUnion(output.firstStage, augmentation)));
      CHECK(problem.setCost(augmentation) <= budget);
    }
  }
}

TEST_CASE("recorded scenarios reconcile both sides of the first-stage argument") {
  GeneratorSpec spec;
  spec.requirements = 4;
  spec.elements = 6;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    spec.seed = seed;
    RobustInstance instance = generateInstance(spec);
    instance.lambda = Cost(2);
    ExactOracle oracle(*instance.problem);
    RobustParams params = oracleParams(oracle);
    ExactRobust exact = oracle.robust(instance.uncertainty, instance.lambda);
    DiscriminatingOutput output =
        robustPSystem(*instance.problem, instance.uncertainty.system,
                      exact.secondStageCost, params);
    // Union of the committed scenarios, exit iteration excluded.
    Scenario committed;
    REQUIRE(!output.iterations.empty());
    const int tau = static_cast<int>(output.iterations.size()) - 1;
    for (int t = 0; t < tau; ++t) {
      committed = setUnion(committed, output.iterations[static_cast<size_t>(t)].scenario);
    }
    Cost unionValue = oracle.optAug(committed, {}).cost;
    // Each committed scenario is augmentable within the optimal second
    // stage, so their union costs at most tau * T* + Phi*.
    CHECK(unionValue <=
          Cost(tau) * exact.secondStageCost + exact.firstStageCost);
    // The online ratio bound reconciles the online solution against it.
    CHECK(output.firstStageCost <= params.onlineFactor * unionValue);
  }
}

TEST_CASE("a union of one system behaves exactly like the plain solver") {
  GeneratorSpec spec;
  spec.requirements = 5;
  spec.elements = 6;
  spec.seed = 4;
  RobustInstance instance = generateInstance(spec);
  for (const Cost& threshold : {Cost(0), Cost(1), Cost(3)}) {
    DiscriminatingOutput plain =
        robustPSystem(*instance.problem, instance.uncertainty.system, threshold);
    DiscriminatingOutput asUnion =
        robustUnionPSystems(*instance.problem, {instance.uncertainty.system}, threshold);
    CHECK(plain.firstStage == asUnion.firstStage);
    CHECK(plain.iterations.size() == asUnion.iterations.size());
    for (size_t t = 0; t < plain.iterations.size(); ++t) {
      CHECK(plain.iterations[t].scenario == asUnion.iterations[t].scenario);
    }
  }
}

TEST_CASE("tied probes commit the first system's scenario") {
  SetCoverProblem problem(3, {Cost(1), Cost(1)}, {{0, 1}, {2}});
  auto omega = std::make_shared<UniformMatroid>(3, 2);
  // Two identical members tie on every probe; the output must match the
  // single-member union.
  DiscriminatingOutput one = robustUnionPSystems(problem, {omega}, Cost(1, 2));
  DiscriminatingOutput two = robustUnionPSystems(problem, {omega, omega}, Cost(1, 2));
  CHECK(one.firstStage == two.firstStage);
  CHECK(one.iterations.size() == two.iterations.size());
}

TEST_CASE("union certificate over the member systems") {
  SetCoverProblem problem(4, {Cost(1), Cost(2, 5), Cost(3, 2)}, {{0, 1}, {2}, {1, 3}});
  ExactOracle oracle(problem);
  auto a = std::make_shared<UniformMatroid>(4, 2);
  auto b = std::make_shared<PartitionMatroid>(std::vector<IndexSet>{{0, 1}, {2, 3}},
                                              std::vector<int>{1, 1});
  RobustParams params = oracleParams(oracle);
  DiscriminatingOutput output = robustUnionPSystems(problem, {a, b}, Cost(1, 4), params);
  for (const RobustIteration& iteration : output.iterations) {
    const Cost marginal = iteration.onlineAfter - iteration.onlineBefore;
    for (std::uint32_t mask = 0; mask < (1u << 4); ++mask) {
      Scenario scenario = fromMask(mask);
      if (!a->contains(scenario) && !b->contains(scenario)) continue;
      CHECK(oracle.optAug(scenario, iteration.firstStageBefore).cost <= Cost(2) * marginal);
    }
  }
}

TEST_CASE("commit-probes variant stays a valid policy") {
  GeneratorSpec spec;
  spec.requirements = 4;
  spec.elements = 6;
  spec.seed = 9;
  RobustInstance instance = generateInstance(spec);
  ExactOracle oracle(*instance.problem);
  RobustParams params = oracleParams(oracle);
  params.commitProbes = true;
  auto a = std::make_shared<UniformMatroid>(4, 1);
  auto b = std::make_shared<UniformMatroid>(4, 2);
  DiscriminatingOutput output =
      robustUnionPSystems(*instance.problem, {a, b}, Cost(1, 2), params);
  for (std::uint32_t mask = 0; mask < (1u << 4); ++mask) {
    Scenario scenario = fromMask(mask);
    if (!b->contains(scenario)) continue;
    IndexSet augmentation = output.augment(scenario);
    CHECK(instance.problem->satisfiesAll(scenario,
                                         setUnion(output.firstStage, augmentation)));
  }
}

TEST_CASE("knapsack uncertainty solver") {
  GeneratorSpec spec;
  spec.requirements = 5;
  spec.elements = 6;
  spec.uncertainty = "and";
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    spec.seed = seed;
    RobustInstance instance = generateInstance(spec);
    ExactOracle oracle(*instance.problem);
    RobustParams params = oracleParams(oracle);
    RobustKnapsackOutput result =
        robustSystemKnapsack(*instance.problem, instance.uncertainty.system,
                             *instance.uncertainty.knapsack, Cost(1, 2), params);
    // Coverage and budget transfer to the original uncertainty set.
    checkDiscriminating(instance, oracle, result.output);
    CHECK(result.objectiveLossFactor ==
          splitPartBound(Cost(6) * result.deltaUsed,
                         instance.uncertainty.knapsack->constraintCount()));
  }
}

TEST_CASE("scenario splitting transfers the second-stage bound") {
  GeneratorSpec spec;
  spec.requirements = 5;
  spec.elements = 6;
  spec.uncertainty = "and";
  spec.seed = 2;
  RobustInstance instance = generateInstance(spec);
  ExactOracle oracle(*instance.problem);
  ExactRobust exact = oracle.robust(instance.uncertainty, Cost(2));

  NormalizedKnapsack normalized = normalizeKnapsacks(*instance.uncertainty.knapsack);
  SingleKnapsack combined = combineKnapsacks(normalized.set);
  KnapsackPartitionReduction reduction(combined.weights, combined.capacity, ReductionParams{});
  for (std::uint32_t mask = 0; mask < (1u << 5); ++mask) {
    Scenario tau = fromMask(mask);
    if (!instance.uncertainty.system->contains(tau) || !reduction.memberOfAny(tau)) continue;
    std::vector<Scenario> parts =
        splitScenario(tau, normalized.set, reduction.epsilonEffective());
    // Each part is a real scenario, so costs at most the optimal second
    // stage; subadditivity sums the pieces.
    Cost bound = Cost(static_cast<int>(parts.size())) * exact.secondStageCost;
    CHECK(oracle.optAug(tau, exact.firstStage).cost <= bound);
    for (const Scenario& part : parts) {
      CHECK(instance.uncertainty.contains(part));
    }
  }
}

TEST_CASE("explicit scenario lists") {
  SetCoverProblem problem(3, {Cost(1), Cost(2, 5), Cost(1)}, {{0, 1}, {1}, {2}});
  ExactOracle oracle(problem);

  SUBCASE("empty list yields the zero solution") {
    DiscriminatingOutput output = robustExplicit(problem, {}, Cost(1));
    CHECK(output.firstStage.empty());
    CHECK(output.firstStageCost == Cost(0));
  }

  SUBCASE("duplicates change nothing") {
    std::vector<Scenario> once = {{0, 1}, {2}};
    std::vector<Scenario> twice = {{0, 1}, {0, 1}, {2}, {2}};
    DiscriminatingOutput a = robustExplicit(problem, once, Cost(1, 2));
    DiscriminatingOutput b = robustExplicit(problem, twice, Cost(1, 2));
    CHECK(a.firstStage == b.firstStage);
    CHECK(a.firstStageCost == b.firstStageCost);
  }

  SUBCASE("single scenario at unit inflation") {
    RobustInstance instance;
    instance.problem = std::make_shared<SetCoverProblem>(problem);
    instance.uncertainty = UncertaintySet::ofScenarios(3, {{0, 2}});
    instance.lambda = Cost(1);
    ExactOracle freshOracle(*instance.problem);
    RobustParams params = oracleParams(freshOracle);
    RobustRunReport report = solveRobustAuto(instance, params, std::nullopt, Cost(1, 10));
    ExactRobust exact = freshOracle.robust(instance.uncertainty, instance.lambda);
    CHECK(exact.value <= report.solution.upperBound);
    const Cost factor = std::max(Cost(2) * params.onlineFactor,
                                 report.solution.output.factors.beta);
    CHECK(report.solution.upperBound <= (Cost(1) + Cost(1, 10)) * factor * exact.value);
  }
}

TEST_CASE("instances without requirements yield empty zero-cost solutions") {
  SetCoverProblem problem(0, {Cost(3)}, {IndexSet{}});
  ExactOracle oracle(problem);
  auto omega = std::make_shared<UniformMatroid>(0, 0);

  MaxMinGreedyResult greedy = maxminGreedy(problem, *omega);
  CHECK(greedy.scenario.empty());
  CHECK(greedy.onlineCostAfter == Cost(0));

  CHECK(oracle.maxMin(UncertaintySet::ofSystem(omega)).value == Cost(0));
  CHECK(oracle.robust(UncertaintySet::ofSystem(omega), Cost(2)).value == Cost(0));

  RobustSolution solution = thresholdSearch(
      problem, Cost(2), Cost(1, 10),
      [&](const Cost& threshold) { return robustPSystem(problem, omega, threshold); });
  CHECK(solution.output.firstStage.empty());
  CHECK(solution.upperBound == Cost(0));
}

TEST_CASE("threshold search") {
  SUBCASE("degenerate grid for a single element") {
    SetCoverProblem problem(1, {Cost(3)}, {{0}});
    auto omega = std::make_shared<UniformMatroid>(1, 1);
    RobustSolution solution = thresholdSearch(
        problem, Cost(1), Cost(1, 10),
        [&](const Cost& threshold) { return robustPSystem(problem, omega, threshold); });
    REQUIRE(solution.trace.size() == 2);  // T = 0 and T = total
    CHECK(solution.trace[0].threshold == Cost(0));
    CHECK(solution.trace[1].threshold == Cost(3));
  }

  SUBCASE("certified bound dominates the exact optimum and the policy") {
    GeneratorSpec spec;
    spec.requirements = 4;
    spec.elements = 6;
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      spec.seed = seed;
      spec.uncertainty = seed % 2 == 0 ? "uniform" : "partition";
      RobustInstance instance = generateInstance(spec);
      instance.lambda = seed % 3 == 0 ? Cost(1) : Cost(5, 2);
      ExactOracle oracle(*instance.problem);
      RobustParams params = oracleParams(oracle);
      RobustRunReport report = solveRobustAuto(instance, params, std::nullopt, Cost(1, 10));
      ExactRobust exact = oracle.robust(instance.uncertainty, instance.lambda);

      CHECK(exact.value <= report.solution.upperBound);
      const Cost factor = std::max(Cost(2) * params.onlineFactor,
                                   report.solution.output.factors.beta);
      CHECK(report.solution.upperBound <=
            (Cost(1) + Cost(1, 10)) * factor * std::max(exact.value, Cost(0)));

      // The bound really does dominate the returned policy's objective.
      Cost worstAugment(0);
      for (const Scenario& scenario : oracle.enumerateScenarios(instance.uncertainty)) {
        Cost cost = report.solution.output.augmentCost(scenario);
        if (worstAugment < cost) worstAugment = cost;
      }
      Cost objective = report.solution.output.firstStageCost + instance.lambda * worstAugment;
      CHECK(objective <= report.solution.upperBound);

      if (instance.lambda == Cost(1)) {
        ExactMaxMin maxmin = oracle.maxMin(instance.uncertainty);
        CHECK(maxmin.value == exact.value);
        CHECK(maxmin.value <= report.solution.upperBound);
      }
    }
  }
}
