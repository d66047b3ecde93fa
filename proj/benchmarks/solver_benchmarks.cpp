#include <benchmark/benchmark.h>

#include "robustcover/generator.hpp"
#include "robustcover/knapsack_reduction.hpp"
#include "robustcover/maxmin.hpp"
#include "robustcover/oracle.hpp"
#include "robustcover/solve.hpp"

namespace {

using namespace robustcover;

RobustInstance makeSetCover(int items, int sets, const std::string& uncertainty) {
  GeneratorSpec spec;
  spec.family = "setcover";
  spec.requirements = items;
  spec.elements = sets;
  spec.uncertainty = uncertainty;
  spec.seed = 7;
  return generateInstance(spec);
}

void OnlineSetCoverFeed(benchmark::State& state) {
  RobustInstance instance = makeSetCover(static_cast<int>(state.range(0)),
                                         2 * static_cast<int>(state.range(0)), "uniform");
  const int n = instance.problem->numRequirements();
  for (auto _ : state) {
    auto run = instance.problem->startOnline();
    for (int i = 0; i < n; ++i) run->feed(i);
    benchmark::DoNotOptimize(run->totalCost());
  }
}
BENCHMARK(OnlineSetCoverFeed)->Arg(16)->Arg(64)->Arg(256);

void MaxMinGreedy(benchmark::State& state) {
  RobustInstance instance = makeSetCover(static_cast<int>(state.range(0)),
                                         2 * static_cast<int>(state.range(0)), "uniform");
  for (auto _ : state) {
    MaxMinGreedyResult result = maxminGreedy(*instance.problem, *instance.uncertainty.system);
    benchmark::DoNotOptimize(result.onlineCostAfter);
  }
}
BENCHMARK(MaxMinGreedy)->Arg(8)->Arg(16)->Arg(32);

void ExactAugmentationSearch(benchmark::State& state) {
  RobustInstance instance =
      makeSetCover(8, static_cast<int>(state.range(0)), "uniform");
  ExactOracle oracle(*instance.problem);
  IndexSet everything = indexRange(instance.problem->numRequirements());
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle.optAug(everything, {}).cost);
  }
}
BENCHMARK(ExactAugmentationSearch)->Arg(10)->Arg(13)->Arg(16);

void ReductionLocate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<Cost> weights;
  for (int i = 0; i < n; ++i) weights.emplace_back(1 + (i % 5), 10);
  ReductionParams params;
  params.delta = Cost(1, 2);
  KnapsackPartitionReduction reduction(weights, Cost(2), params);
  IndexSet probe = {0, 2, 4};
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduction.locate(probe));
  }
}
BENCHMARK(ReductionLocate)->Arg(16)->Arg(64)->Arg(256);

void RobustThresholdSearch(benchmark::State& state) {
  RobustInstance instance = makeSetCover(5, 7, "uniform");
  instance.lambda = Cost(2);
  for (auto _ : state) {
    RobustRunReport report = solveRobustAuto(instance, {}, std::nullopt, Cost(1, 10));
    benchmark::DoNotOptimize(report.solution.upperBound);
  }
}
BENCHMARK(RobustThresholdSearch);

}  // namespace

BENCHMARK_MAIN();
