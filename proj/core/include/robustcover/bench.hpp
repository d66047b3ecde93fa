#pragma once

#include <optional>
#include <string>
#include <vector>

#include "robustcover/generator.hpp"

namespace robustcover {

/// One CSV row of the experiment harness. Exact columns stay empty when
/// the oracle is off or the instance is beyond its budget.
struct BenchRow {
  std::string instance;
  std::string problem;
  int p = 0;
  int q = 0;
  Cost lambda{1};
  std::string algorithm;
  Cost value{0};  // certified upper bound on the optimum
  std::optional<Cost> exact;
  std::optional<Cost> ratio;
  std::optional<Cost> rhoOn;
  std::optional<Cost> rhoOff;
  long long runtimeMs = 0;
};

std::string benchCsvHeader();
std::string benchCsvRow(const BenchRow& row);

struct BenchSpec {
  std::vector<GeneratorSpec> instances;
  std::vector<Cost> lambdas = {Cost(1)};
  std::vector<std::string> solvers = {"maxmin", "robust"};
  int repetitions = 1;
  bool oracle = false;
};

/// Parses a spec document ({} is valid and yields no rows); unknown keys
/// are rejected. An overriding seed replaces every instance seed.
BenchSpec parseBenchSpec(const std::string& text,
                         std::optional<std::uint64_t> seedOverride = std::nullopt);

/// Runs the harness; timing is opt-in so default output stays
/// byte-identical across runs.
std::vector<BenchRow> runBench(const BenchSpec& spec, bool timing);

}  // namespace robustcover
