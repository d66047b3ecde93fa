#include "doctest.h"

#include "robustcover/errors.hpp"
#include "robustcover/independence.hpp"
#include "robustcover/knapsack.hpp"
#include "robustcover/rng.hpp"
#include "robustcover/setcover.hpp"
#include "robustcover/uncertainty.hpp"

using namespace robustcover;

namespace {

void checkDownwardClosed(const IndependenceSystem& system) {
  const int n = system.groundSize();
  REQUIRE(n <= 10);
  const std::uint32_t total = 1u << n;
  std::vector<char> member(total, 0);
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    member[mask] = system.contains(fromMask(mask)) ? 1 : 0;
  }
  CHECK(member[0] == 1);
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    if (!member[mask]) continue;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) CHECK(member[mask & ~(1u << i)] == 1);
    }
  }
}

}  // namespace

TEST_CASE("covering instance validation") {
  SetCoverProblem good(2, {Cost(1), Cost(2, 5)}, {{0, 1}, {1}});
  CHECK_NOTHROW(good.validate());

  SetCoverProblem uncovered(3, {Cost(1)}, {{0, 1}});
  CHECK_THROWS_AS(uncovered.validate(), InvalidInstance);

  SetCoverProblem negative(1, {Cost(-1)}, {{0}});
  CHECK_THROWS_AS(negative.validate(), InvalidInstance);
}

TEST_CASE("uniform matroid is exactly the cardinality bound") {
  UniformMatroid system(8, 3);
  for (std::uint32_t mask = 0; mask < (1u << 8); ++mask) {
    IndexSet set = fromMask(mask);
    CHECK(system.contains(set) == (set.size() <= 3));
  }
  CHECK(system.pValue() == 1);
}

TEST_CASE("partition matroid counts per part") {
  PartitionMatroid system({{0, 1, 2}, {3, 4}}, {1, 2});
  CHECK(system.contains({0, 3, 4}));
  CHECK_FALSE(system.contains({0, 1}));
  CHECK(system.contains({}));
  CHECK_FALSE(system.contains({5}));  // out of range

  PartitionMatroid unbounded({{0, 1}}, {PartitionMatroid::kUnbounded});
  CHECK(unbounded.contains({0, 1}));

  CHECK_THROWS_AS(PartitionMatroid({{0, 0}}, {1}), PreconditionError);
  CHECK_THROWS_AS(PartitionMatroid({{0}, {0}}, {1, 1}), PreconditionError);
}

TEST_CASE("graphic matroid accepts exactly forests") {
  // Triangle on vertices 0,1,2 plus a pendant edge.
  GraphicMatroid system(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  CHECK(system.contains({0, 1, 3}));
  CHECK_FALSE(system.contains({0, 1, 2}));
  CHECK(system.pValue() == 1);
  checkDownwardClosed(system);
}

TEST_CASE("intersection membership is the conjunction of members") {
  auto a = std::make_shared<UniformMatroid>(6, 2);
  auto b = std::make_shared<PartitionMatroid>(
      std::vector<IndexSet>{{0, 1, 2}, {3, 4, 5}}, std::vector<int>{1, 2});
  IntersectionSystem both({a, b});
  CHECK(both.pValue() == 2);
  for (std::uint32_t mask = 0; mask < (1u << 6); ++mask) {
    IndexSet set = fromMask(mask);
    CHECK(both.contains(set) == (a->contains(set) && b->contains(set)));
  }
}

TEST_CASE("explicit family answers by subset test and computes its p") {
  ExplicitFamily family(4, {{0, 1}, {2}});
  CHECK(family.contains({0}));
  CHECK(family.contains({0, 1}));
  CHECK(family.contains({2}));
  CHECK_FALSE(family.contains({0, 2}));
  CHECK_FALSE(family.contains({3}));
  // Within {0,1,2} the maximal members are {0,1} and {2}.
  CHECK(family.pValue() == 2);
  checkDownwardClosed(family);
}

TEST_CASE("built-in systems are downward closed") {
  DeterministicRng rng(11);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 5 + rng.uniformInt(0, 2);
    std::vector<IndexSet> parts(2);
    for (int i = 0; i < n; ++i) parts[static_cast<size_t>(rng.uniformInt(0, 1))].push_back(i);
    auto partition = std::make_shared<PartitionMatroid>(parts, std::vector<int>{1, 2});
    auto uniform = std::make_shared<UniformMatroid>(n, rng.uniformInt(1, 3));
    checkDownwardClosed(*partition);
    checkDownwardClosed(*uniform);
    checkDownwardClosed(IntersectionSystem({partition, uniform}));
  }
}

TEST_CASE("knapsack normalization scales capacities to one") {
  SUBCASE("plain scaling") {
    KnapsackSet knapsack({{Cost(2), Cost(4)}}, {Cost(4)});
    NormalizedKnapsack result = normalizeKnapsacks(knapsack);
    CHECK(result.set.weights(0) == std::vector<Cost>{Cost(1, 2), Cost(1)});
    CHECK(result.set.capacity(0) == Cost(1));
    CHECK(result.dropped.empty());
  }
  SUBCASE("infeasible singleton is dropped") {
    KnapsackSet knapsack({{Cost(5), Cost(1)}}, {Cost(4)});
    NormalizedKnapsack result = normalizeKnapsacks(knapsack);
    CHECK(result.set.weights(0) == std::vector<Cost>{Cost(5, 4), Cost(1, 4)});
    CHECK(result.dropped == IndexSet{0});
    CHECK_FALSE(result.set.contains({0}));
  }
  SUBCASE("two constraints scale independently") {
    KnapsackSet knapsack({{Cost(1), Cost(1)}, {Cost(3), Cost(1)}}, {Cost(2), Cost(3)});
    NormalizedKnapsack result = normalizeKnapsacks(knapsack);
    CHECK(result.set.weights(0) == std::vector<Cost>{Cost(1, 2), Cost(1, 2)});
    CHECK(result.set.weights(1) == std::vector<Cost>{Cost(1), Cost(1, 3)});
    CHECK(result.dropped.empty());
  }
  SUBCASE("zero capacity is rejected") {
    KnapsackSet knapsack({{Cost(1)}}, {Cost(0)});
    CHECK_THROWS_AS(normalizeKnapsacks(knapsack), PreconditionError);
  }
}

TEST_CASE("normalization preserves feasibility exactly") {
  DeterministicRng rng(23);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 4 + rng.uniformInt(0, 4);
    const int q = 1 + rng.uniformInt(0, 1);
    std::vector<std::vector<Cost>> weights(static_cast<size_t>(q));
    std::vector<Cost> capacities;
    for (int j = 0; j < q; ++j) {
      for (int i = 0; i < n; ++i) {
        weights[static_cast<size_t>(j)].emplace_back(rng.uniformInt(1, 30), 10);
      }
      capacities.emplace_back(rng.uniformInt(5, 20), 10);
    }
    KnapsackSet knapsack(weights, capacities);
    NormalizedKnapsack normalized = normalizeKnapsacks(knapsack);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      IndexSet set = fromMask(mask);
      bool touchesDropped = !setIntersection(set, normalized.dropped).empty();
      CHECK(knapsack.contains(set) == (!touchesDropped && normalized.set.contains(set)));
      // Scaling alone never changes membership.
      CHECK(knapsack.contains(set) == normalized.set.contains(set));
    }
  }
}

TEST_CASE("combining a normalized knapsack") {
  SUBCASE("single constraint is the identity") {
    KnapsackSet knapsack({{Cost(1, 2), Cost(1, 4)}}, {Cost(1)});
    SingleKnapsack combined = combineKnapsacks(knapsack);
    CHECK(combined.weights == std::vector<Cost>{Cost(1, 2), Cost(1, 4)});
    CHECK(combined.capacity == Cost(1));
  }
  SUBCASE("weights add and capacity becomes q") {
    KnapsackSet knapsack({{Cost(1, 2), Cost(1, 2)}, {Cost(1), Cost(0)}}, {Cost(1), Cost(1)});
    SingleKnapsack combined = combineKnapsacks(knapsack);
    CHECK(combined.weights == std::vector<Cost>{Cost(3, 2), Cost(1, 2)});
    CHECK(combined.capacity == Cost(2));
  }
  SUBCASE("feasible sets stay inside the combined constraint") {
    DeterministicRng rng(5);
    const int n = 6;
    std::vector<std::vector<Cost>> weights(2);
    for (int j = 0; j < 2; ++j) {
      for (int i = 0; i < n; ++i) {
        weights[static_cast<size_t>(j)].emplace_back(rng.uniformInt(1, 10), 10);
      }
    }
    KnapsackSet knapsack(weights, {Cost(1), Cost(1)});
    SingleKnapsack combined = combineKnapsacks(knapsack);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      IndexSet set = fromMask(mask);
      if (!knapsack.contains(set)) continue;
      Cost total(0);
      for (int i : set) total += combined.weights[static_cast<size_t>(i)];
      CHECK(total <= combined.capacity);
    }
  }
  SUBCASE("unnormalized input is rejected") {
    KnapsackSet knapsack({{Cost(1)}}, {Cost(2)});
    CHECK_THROWS_AS(combineKnapsacks(knapsack), PreconditionError);
  }
}

TEST_CASE("uncertainty set dispatch") {
  auto uniform = std::make_shared<UniformMatroid>(3, 2);
  UncertaintySet plain = UncertaintySet::ofSystem(uniform);
  CHECK(plain.contains({0, 1}));
  CHECK_FALSE(plain.contains({0, 1, 2}));

  auto knapsack = std::make_shared<KnapsackSet>(
      std::vector<std::vector<Cost>>{{Cost(3, 5), Cost(3, 5), Cost(1, 5)}},
      std::vector<Cost>{Cost(1)});
  UncertaintySet mixed = UncertaintySet::ofSystemAndKnapsack(uniform, knapsack);
  CHECK(mixed.contains({0, 2}));
  CHECK_FALSE(mixed.contains({0, 1}));  // weight 6/5

  UncertaintySet listed = UncertaintySet::ofScenarios(3, {{0, 1}});
  CHECK(listed.contains({0}));
  CHECK_FALSE(listed.contains({2}));
}
