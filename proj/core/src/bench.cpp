#include "robustcover/bench.hpp"

#include <chrono>

#include "json.hpp"

#include "robustcover/errors.hpp"
#include "robustcover/oracle.hpp"
#include "robustcover/solve.hpp"

namespace robustcover {

namespace {

using nlohmann::json;

std::string formatOptional(const std::optional<Cost>& value) {
  return value ? value->str() : std::string();
}

GeneratorSpec parseGeneratorSpec(const json& node) {
  if (!node.is_object()) throw ParseError("instance spec must be an object");
  static const std::vector<std::string> allowed = {
      "family",      "requirements",        "elements",  "vertices",
      "seed",        "coverPercent",        "edgePercent", "uncertainty",
      "uniformBound", "partitionParts",      "knapsackConstraints", "explicitScenarios",
      "name"};
  for (auto it = node.begin(); it != node.end(); ++it) {
    bool known = false;
    for (const std::string& key : allowed) {
      if (it.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) throw ParseError("unknown key '" + it.key() + "' in instance spec");
  }
  GeneratorSpec spec;
  auto readInt = [&](const char* key, int& out) {
    if (auto it = node.find(key); it != node.end()) {
      if (!it->is_number_integer()) throw ParseError(std::string(key) + " must be an integer");
      out = it->get<int>();
    }
  };
  if (auto it = node.find("family"); it != node.end()) spec.family = it->get<std::string>();
  readInt("requirements", spec.requirements);
  readInt("elements", spec.elements);
  readInt("vertices", spec.vertices);
  if (auto it = node.find("seed"); it != node.end()) spec.seed = it->get<std::uint64_t>();
  readInt("coverPercent", spec.coverPercent);
  readInt("edgePercent", spec.edgePercent);
  if (auto it = node.find("uncertainty"); it != node.end()) {
    spec.uncertainty = it->get<std::string>();
  }
  readInt("uniformBound", spec.uniformBound);
  readInt("partitionParts", spec.partitionParts);
  readInt("knapsackConstraints", spec.knapsackConstraints);
  readInt("explicitScenarios", spec.explicitScenarios);
  return spec;
}

Cost parseLambda(const json& value) {
  if (value.is_number_integer()) return Cost(value.get<std::int64_t>());
  if (value.is_string()) {
    if (auto parsed = Cost::parse(value.get<std::string>())) return *parsed;
  }
  throw ParseError("lambda entries must be integers or rational strings");
}

}  // namespace

std::string benchCsvHeader() {
  return "instance,problem,p,q,lambda,alg,value,exact,ratio,rho_on,rho_off,runtime_ms";
}

std::string benchCsvRow(const BenchRow& row) {
  std::string out;
  out += row.instance + ",";
  out += row.problem + ",";
  out += std::to_string(row.p) + ",";
  out += std::to_string(row.q) + ",";
  out += row.lambda.str() + ",";
  out += row.algorithm + ",";
  out += row.value.str() + ",";
  out += formatOptional(row.exact) + ",";
  out += formatOptional(row.ratio) + ",";
  out += formatOptional(row.rhoOn) + ",";
  out += formatOptional(row.rhoOff) + ",";
  out += std::to_string(row.runtimeMs);
  return out;
}

BenchSpec parseBenchSpec(const std::string& text, std::optional<std::uint64_t> seedOverride) {
  json document;
  try {
    document = json::parse(text);
  } catch (const json::parse_error& error) {
    throw ParseError(std::string("invalid JSON: ") + error.what());
  }
  if (!document.is_object()) throw ParseError("bench spec must be an object");
  static const std::vector<std::string> allowed = {"instances", "lambdas", "solvers",
                                                   "repetitions", "oracle"};
  for (auto it = document.begin(); it != document.end(); ++it) {
    bool known = false;
    for (const std::string& key : allowed) {
      if (it.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) throw ParseError("unknown key '" + it.key() + "' in bench spec");
  }
  BenchSpec spec;
  if (auto it = document.find("instances"); it != document.end()) {
    for (const json& node : *it) spec.instances.push_back(parseGeneratorSpec(node));
  }
  if (auto it = document.find("lambdas"); it != document.end()) {
    spec.lambdas.clear();
    for (const json& node : *it) spec.lambdas.push_back(parseLambda(node));
  }
  if (auto it = document.find("solvers"); it != document.end()) {
    spec.solvers = it->get<std::vector<std::string>>();
  }
  if (auto it = document.find("repetitions"); it != document.end()) {
    spec.repetitions = it->get<int>();
  }
  if (auto it = document.find("oracle"); it != document.end()) {
    spec.oracle = it->get<bool>();
  }
  if (seedOverride) {
    for (GeneratorSpec& g : spec.instances) g.seed = *seedOverride;
  }
  return spec;
}

std::vector<BenchRow> runBench(const BenchSpec& spec, bool timing) {
  std::vector<BenchRow> rows;
  int counter = 0;
  for (const GeneratorSpec& generator : spec.instances) {
    for (int rep = 0; rep < spec.repetitions; ++rep) {
      GeneratorSpec current = generator;
      current.seed = generator.seed + static_cast<std::uint64_t>(rep);
      RobustInstance instance = generateInstance(current);
      const std::string name = current.family + "-" + std::to_string(counter) + "-s" +
                               std::to_string(current.seed);
      ++counter;

      std::optional<ExactOracle> oracle;
      std::optional<Cost> rhoOn, rhoOff;
      if (spec.oracle) {
        try {
          oracle.emplace(*instance.problem);
          rhoOn = oracle->onlineRatioBound();
          rhoOff = oracle->offlineRatioBound();
        } catch (const BudgetExceeded&) {
          oracle.reset();  // beyond desk scale; exact columns stay empty
        }
      }

      const int q = instance.uncertainty.knapsack
                        ? instance.uncertainty.knapsack->constraintCount()
                        : 0;
      for (const std::string& solver : spec.solvers) {
        for (const Cost& lambda : spec.lambdas) {
          RobustInstance solvedInstance = instance;
          solvedInstance.lambda = lambda;
          BenchRow row;
          row.instance = name;
          row.problem = instance.problem->kind();
          row.p = instance.uncertainty.pValue();
          row.q = q;
          row.lambda = lambda;
          row.algorithm = solver;
          auto started = std::chrono::steady_clock::now();
          if (solver == "maxmin") {
            ReductionParams reduction;
            reduction.delta = KnapsackPartitionReduction::chooseDelta(
                instance.problem->numRequirements(), reduction.enumerationCap);
            MaxMinRunReport report = solveMaxMinAuto(solvedInstance, reduction);
            row.value = report.certifiedUpperBound;
            if (oracle) {
              row.exact = oracle->maxMin(instance.uncertainty).value;
              if (!row.exact->isZero()) row.ratio = row.value / *row.exact;
            }
          } else if (solver == "robust") {
            RobustParams params;
            if (rhoOn) params.onlineFactor = *rhoOn;
            if (rhoOff) params.offlineFactor = *rhoOff;
            params.reduction.delta = KnapsackPartitionReduction::chooseDelta(
                instance.problem->numRequirements(), params.reduction.enumerationCap);
            RobustRunReport report =
                solveRobustAuto(solvedInstance, params, std::nullopt, Cost(1, 10));
            row.value = report.solution.upperBound;
            if (oracle) {
              row.exact = oracle->robust(instance.uncertainty, lambda).value;
              if (!row.exact->isZero()) row.ratio = row.value / *row.exact;
            }
          } else {
            throw ParseError("unknown solver '" + solver + "' in bench spec");
          }
          if (timing) {
            auto elapsed = std::chrono::steady_clock::now() - started;
            row.runtimeMs =
                std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
          }
          row.rhoOn = rhoOn;
          row.rhoOff = rhoOff;
          rows.push_back(std::move(row));
        }
      }
    }
  }
  return rows;
}

}  // namespace robustcover
