#include "doctest.h"

#include "robustcover/generator.hpp"
#include "robustcover/knapsack_reduction.hpp"
#include "robustcover/maxmin.hpp"
#include "robustcover/oracle.hpp"
#include "robustcover/rng.hpp"
#include "robustcover/setcover.hpp"

using namespace robustcover;

namespace {

Cost weightOf(const std::vector<Cost>& weights, const IndexSet& set) {
  Cost total(0);
  for (int i : set) total += weights[static_cast<size_t>(i)];
  return total;
}

}  // namespace

TEST_CASE("greedy on the empty uncertainty set returns the empty scenario") {
  SetCoverProblem problem(3, {Cost(1), Cost(1)}, {{0, 1}, {2}});
  UniformMatroid nothing(3, 0);
  MaxMinGreedyResult result = maxminGreedy(problem, nothing);
  CHECK(result.scenario.empty());
  CHECK(result.onlineCostAfter == Cost(0));
  CHECK(result.trace.empty());
}

TEST_CASE("greedy scenario on the two-set instance") {
  SetCoverProblem problem(3, {Cost(1), Cost(1)}, {{0, 1}, {2}});
  UniformMatroid omega(3, 2);
  ExactOracle oracle(problem);

  // Brute force over all scenarios of size <= 2: the adversary's best is 2.
  ExactMaxMin exact = oracle.maxMin(UncertaintySet::ofSystem(std::make_shared<UniformMatroid>(3, 2)));
  CHECK(exact.value == Cost(2));

  MaxMinGreedyResult greedy = maxminGreedy(problem, omega);
  CHECK(omega.contains(greedy.scenario));
  CHECK(greedy.certifiedFactor == 2);

  Cost marginalSum(0);
  for (const GreedyStep& step : greedy.trace) marginalSum += step.marginal;
  CHECK(marginalSum == greedy.addedCost());

  Cost rhoOn = oracle.onlineRatioBound();
  Cost scenarioValue = oracle.optValue(greedy.scenario);
  CHECK(Cost(2) * rhoOn * scenarioValue >= exact.value);
}

TEST_CASE("greedy certificate covers every independent scenario") {
  GeneratorSpec spec;
  spec.requirements = 5;
  spec.elements = 7;
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    spec.seed = seed;
    spec.family = seed % 2 == 0 ? "steiner" : "setcover";
    spec.uncertainty = seed % 3 == 0 ? "partition" : "uniform";
    RobustInstance instance = generateInstance(spec);
    ExactOracle oracle(*instance.problem);
    MaxMinGreedyResult greedy = maxminGreedy(*instance.problem, *instance.uncertainty.system);
    const Cost budget = Cost(greedy.certifiedFactor) * greedy.onlineCostAfter;
    for (const Scenario& b : oracle.enumerateScenarios(instance.uncertainty)) {
      CHECK(oracle.optAug(b, {}).cost <= budget);
    }
    // Maximality: no feasible extension remains.
    for (int e = 0; e < instance.problem->numRequirements(); ++e) {
      if (setContains(greedy.scenario, e)) continue;
      CHECK_FALSE(instance.uncertainty.system->canExtend(greedy.scenario, e));
    }
  }
}

TEST_CASE("greedy handles graphic and explicit uncertainty sets") {
  SetCoverProblem problem(3, {Cost(1), Cost(2, 5), Cost(1)}, {{0, 1}, {1}, {2}});
  ExactOracle oracle(problem);

  SUBCASE("requirements as the edges of a triangle") {
    auto graphic = std::make_shared<GraphicMatroid>(
        3, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}});
    MaxMinGreedyResult greedy = maxminGreedy(problem, *graphic);
    CHECK(graphic->contains(greedy.scenario));
    CHECK(greedy.scenario.size() == 2);  // spanning forests of a triangle
    const Cost budget = Cost(greedy.certifiedFactor) * greedy.onlineCostAfter;
    for (const Scenario& b :
         oracle.enumerateScenarios(UncertaintySet::ofSystem(graphic))) {
      CHECK(oracle.optAug(b, {}).cost <= budget);
    }
  }

  SUBCASE("listed maximal scenarios") {
    ExplicitFamily family(3, {{0, 1}, {2}});
    MaxMinGreedyResult greedy = maxminGreedy(problem, family);
    CHECK(family.contains(greedy.scenario));
    const Cost budget = Cost(greedy.certifiedFactor) * greedy.onlineCostAfter;
    for (std::uint32_t mask = 0; mask < 8; ++mask) {
      Scenario b = fromMask(mask);
      if (!family.contains(b)) continue;
      CHECK(oracle.optAug(b, {}).cost <= budget);
    }
  }
}

TEST_CASE("reduction shape on the quarter-weight example") {
  // Four items of weight 1/2 against capacity 1 at delta = 1.
  std::vector<Cost> weights(4, Cost(1, 2));
  ReductionParams params;
  KnapsackPartitionReduction reduction(weights, Cost(1), params);
  CHECK(reduction.beta() == Cost(1, 4));
  CHECK(reduction.groupCount() == 2);
  CHECK(reduction.partitionTotal() == 2);
  CHECK(reduction.matroidCount() == 3);
  CHECK(reduction.matroidCountExact());

  std::vector<std::vector<int>> compositions;
  reduction.forEachComposition([&](const std::vector<int>& c) { compositions.push_back(c); });
  CHECK(compositions == std::vector<std::vector<int>>{{0, 2}, {1, 1}, {2, 0}});

  SUBCASE("locating a capacity-weight set") {
    std::vector<int> tau = reduction.locate({0, 1});
    CHECK(tau == std::vector<int>{2, 0});
    CHECK(reduction.matroidFor(tau).contains({0, 1}));
  }
  SUBCASE("locating the empty set pads everything into the first group") {
    std::vector<int> tau = reduction.locate({});
    CHECK(tau == std::vector<int>{2, 0});
    CHECK(reduction.matroidFor(tau).contains({}));
  }
}

TEST_CASE("the lopsided knapsack's big side is located") {
  const int n = 6;
  std::vector<Cost> weights{Cost(1)};
  for (int i = 1; i < n; ++i) weights.emplace_back(1, n);
  ReductionParams params;
  params.delta = Cost(1, 2);
  KnapsackPartitionReduction reduction(weights, Cost(1), params);

  IndexSet bigSide;
  for (int i = 1; i < n; ++i) bigSide.push_back(i);
  CHECK(weightOf(weights, bigSide) <= Cost(1));
  CHECK(reduction.memberOfAny(bigSide));
  std::vector<int> tau = reduction.locate(bigSide);
  CHECK(reduction.matroidFor(tau).contains(bigSide));
}

TEST_CASE("closed-form membership agrees with enumerating the matroids") {
  DeterministicRng rng(3);
  for (int trial = 0; trial < 4; ++trial) {
    const int n = 5 + trial;
    std::vector<Cost> weights;
    for (int i = 0; i < n; ++i) weights.emplace_back(rng.uniformInt(1, 20), 20);
    ReductionParams params;  // delta = 1 keeps the family enumerable
    KnapsackPartitionReduction reduction(weights, Cost(1), params);
    std::vector<PartitionMatroid> matroids;
    reduction.forEachComposition(
        [&](const std::vector<int>& c) { matroids.push_back(reduction.matroidFor(c)); });
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      IndexSet set = fromMask(mask);
      bool enumerated = false;
      for (const PartitionMatroid& matroid : matroids) {
        if (matroid.contains(set)) {
          enumerated = true;
          break;
        }
      }
      CHECK(enumerated == reduction.memberOfAny(set));
    }
  }
}

TEST_CASE("reduction guarantees on random weights") {
  DeterministicRng rng(41);
  for (const Cost& delta : {Cost(1), Cost(1, 2), Cost(1, 3)}) {
    for (int trial = 0; trial < 4; ++trial) {
      const int n = 6;
      std::vector<Cost> weights;
      for (int i = 0; i < n; ++i) weights.emplace_back(rng.uniformInt(1, 20), 20);
      ReductionParams params;
      params.delta = delta;
      KnapsackPartitionReduction reduction(weights, Cost(1), params);
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        IndexSet set = fromMask(mask);
        Cost weight = weightOf(weights, set);
        if (reduction.memberOfAny(set)) {
          CHECK(weight <= reduction.weightBound());
        }
        if (weight <= Cost(1)) {
          std::vector<int> tau = reduction.locate(set);
          CHECK(reduction.matroidFor(tau).contains(set));
          CHECK(reduction.memberOfAny(set));
        }
      }
    }
  }
}

TEST_CASE("enumeration cap trips instead of looping") {
  std::vector<Cost> weights(8, Cost(1, 2));
  ReductionParams params;
  params.delta = Cost(1, 3);
  params.enumerationCap = 10;
  KnapsackPartitionReduction reduction(weights, Cost(1), params);
  CHECK_THROWS_AS(reduction.forEachComposition([](const std::vector<int>&) {}),
                  EnumerationCapExceeded);
}

TEST_CASE("default delta picks the smallest affordable grid value") {
  Cost generous = KnapsackPartitionReduction::chooseDelta(4, 1u << 30);
  Cost tight = KnapsackPartitionReduction::chooseDelta(4, 10);
  CHECK(generous <= tight);
  std::vector<Cost> weights(4, Cost(1, 2));
  ReductionParams params;
  params.delta = tight;
  params.enumerationCap = 10;
  KnapsackPartitionReduction reduction(weights, Cost(1), params);
  CHECK(reduction.matroidCount() <= 10);
}

TEST_CASE("scenario splitting") {
  SUBCASE("empty scenario splits into nothing") {
    KnapsackSet knapsack({{Cost(1, 2), Cost(1, 2)}}, {Cost(1)});
    CHECK(splitScenario({}, knapsack, Cost(1, 2)).empty());
  }

  SUBCASE("the worked single-knapsack example") {
    KnapsackSet knapsack({{Cost(3, 5), Cost(3, 5), Cost(3, 10)}}, {Cost(1)});
    std::vector<Scenario> parts = splitScenario({0, 1, 2}, knapsack, Cost(1, 2));
    CHECK(parts == std::vector<Scenario>{{0, 2}, {1}});
    CHECK(static_cast<int>(parts.size()) <= splitPartBound(Cost(1, 2), 1));
  }

  SUBCASE("parts partition the scenario and stay feasible") {
    DeterministicRng rng(9);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = 6;
      const int q = 1 + rng.uniformInt(0, 1);
      std::vector<std::vector<Cost>> weights(static_cast<size_t>(q));
      for (int j = 0; j < q; ++j) {
        for (int i = 0; i < n; ++i) {
          weights[static_cast<size_t>(j)].emplace_back(rng.uniformInt(5, 60), 100);
        }
      }
      KnapsackSet knapsack(weights, std::vector<Cost>(static_cast<size_t>(q), Cost(1)));
      const Cost epsilon(1, 2);
      Scenario tau;
      for (int i = 0; i < n; ++i) {
        Scenario candidate = tau;
        candidate.push_back(i);
        Cost combined(0);
        for (int j = 0; j < q; ++j) combined += knapsack.constraintWeight(j, candidate);
        if (combined <= (Cost(1) + epsilon) * Cost(q)) tau = candidate;
      }
      std::vector<Scenario> parts = splitScenario(tau, knapsack, epsilon);
      CHECK(static_cast<int>(parts.size()) <= splitPartBound(epsilon, q));
      Scenario covered;
      for (const Scenario& part : parts) {
        CHECK(knapsack.contains(part));
        CHECK(setIntersection(covered, part).empty());
        covered = setUnion(covered, part);
      }
      CHECK(covered == tau);
    }
  }

  SUBCASE("bound matches the fixed-relaxation form") {
    CHECK(splitPartBound(Cost(1, 2), 1) == 4);   // 3q + 1 at epsilon = 1/2
    CHECK(splitPartBound(Cost(1, 2), 2) == 7);
    CHECK(splitPartBound(Cost(1), 2) == 9);      // floor(2 * 2 * q) + 1
  }

  SUBCASE("violated preconditions are reported") {
    KnapsackSet knapsack({{Cost(3, 5), Cost(3, 5), Cost(3, 5)}}, {Cost(1)});
    CHECK_THROWS_AS(splitScenario({0, 1, 2}, knapsack, Cost(1, 10)), PreconditionError);
  }
}

TEST_CASE("max-min under a system and a knapsack") {
  SUBCASE("a slack knapsack degenerates toward plain greedy") {
    SetCoverProblem problem(3, {Cost(1), Cost(1)}, {{0, 1}, {2}});
    auto all = std::make_shared<UniformMatroid>(3, 3);
    KnapsackSet slack({{Cost(1, 3), Cost(1, 3), Cost(1, 3)}}, {Cost(1)});
    MaxMinKnapsackResult result =
        maxminSystemKnapsack(problem, all, slack, ReductionParams{});
    CHECK(all->contains(result.scenario));
    CHECK(slack.contains(result.scenario));
  }

  SUBCASE("certified quality against the brute-force optimum") {
    GeneratorSpec spec;
    spec.requirements = 5;
    spec.elements = 6;
    spec.uncertainty = "and";
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      spec.seed = seed;
      RobustInstance instance = generateInstance(spec);
      ExactOracle oracle(*instance.problem);
      MaxMinKnapsackResult result =
          maxminSystemKnapsack(*instance.problem, instance.uncertainty.system,
                               *instance.uncertainty.knapsack, ReductionParams{});
      CHECK(instance.uncertainty.contains(result.scenario));

      ExactMaxMin exact = oracle.maxMin(instance.uncertainty);
      Cost rhoOn = oracle.onlineRatioBound();
      Cost rhoOff = oracle.offlineRatioBound();
      const int p = instance.uncertainty.system->pValue();
      // Guarantee chain: the winning run certifies (p+2) * onlineCost
      // above every feasible scenario, the split loses a part-count
      // factor, the offline tie-break one offline factor.
      Cost denominator =
          Cost(p + 2) * Cost(static_cast<int>(result.parts.size())) * rhoOn * rhoOff;
      CHECK(exact.value <= denominator * oracle.optValue(result.scenario));
      CHECK(exact.value <= result.certifiedUpperBound);
    }
  }

  SUBCASE("every feasible scenario lands in some reduced intersection") {
    GeneratorSpec spec;
    spec.requirements = 5;
    spec.elements = 6;
    spec.uncertainty = "and";
    spec.seed = 8;
    RobustInstance instance = generateInstance(spec);
    NormalizedKnapsack normalized = normalizeKnapsacks(*instance.uncertainty.knapsack);
    SingleKnapsack combined = combineKnapsacks(normalized.set);
    KnapsackPartitionReduction reduction(combined.weights, combined.capacity,
                                         ReductionParams{});
    for (std::uint32_t mask = 0; mask < (1u << 5); ++mask) {
      Scenario omega = fromMask(mask);
      if (!instance.uncertainty.contains(omega)) continue;
      std::vector<int> tau = reduction.locate(omega);
      CHECK(reduction.matroidFor(tau).contains(omega));
      CHECK(instance.uncertainty.system->contains(omega));
    }
  }

  SUBCASE("randomized selection averages to a part-count fraction") {
    GeneratorSpec spec;
    spec.requirements = 5;
    spec.elements = 6;
    spec.uncertainty = "and";
    spec.seed = 3;
    RobustInstance instance = generateInstance(spec);
    ExactOracle oracle(*instance.problem);
    MaxMinKnapsackResult result =
        maxminSystemKnapsack(*instance.problem, instance.uncertainty.system,
                             *instance.uncertainty.knapsack, ReductionParams{},
                             PartSelection::Randomized, 99);
    REQUIRE_FALSE(result.parts.empty());
    bool isOnePart = false;
    Cost sumOfPartValues(0);
    for (const Scenario& part : result.parts) {
      isOnePart = isOnePart || part == result.scenario;
      sumOfPartValues += oracle.optValue(part);
    }
    CHECK(isOnePart);
    // Subadditivity: the parts' values add up to at least the whole, so
    // the uniform average is a part-count fraction of it.
    CHECK(oracle.optValue(result.matroidScenario) <= sumOfPartValues);
  }
}
