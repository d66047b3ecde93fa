#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "robustcover/bench.hpp"
#include "robustcover/errors.hpp"
#include "robustcover/generator.hpp"
#include "robustcover/oracle.hpp"
#include "robustcover/solve.hpp"

namespace {

using namespace robustcover;
using nlohmann::json;

Cost costOption(const std::string& text, const std::string& name) {
  if (auto parsed = Cost::parse(text)) return *parsed;
  throw ParseError("option " + name + " is not a valid rational: '" + text + "'");
}

IndexSet indexListOption(const std::string& text, const std::string& name) {
  IndexSet out;
  if (text.empty()) return out;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    try {
      out.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw ParseError("option " + name + " expects comma-separated indices");
    }
  }
  return normalizedIndexSet(out);
}

void writeOutput(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open output file '" + path + "'");
  out << text;
}

json scenarioJson(const Scenario& scenario) { return json(scenario); }

std::uint64_t effectiveSeed(std::uint64_t fromFlags) {
  if (const char* env = std::getenv("ROBUSTCOVER_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return fromFlags;
}

struct CommonFlags {
  std::string format = "human";
  std::string output;
};

void checkFormat(const CommonFlags& flags, bool allowCsv) {
  if (flags.format == "csv" && !allowCsv) {
    throw ParseError("csv format is only available for the bench subcommand");
  }
}

int runMaxMin(const std::string& file, const CommonFlags& flags, bool useOracle,
              const std::string& deltaText, std::uint64_t cap, const std::string& mode,
              std::uint64_t seed, const std::string& emitMatroids) {
  RobustInstance instance = parseInstanceFile(file);
  ReductionParams reduction;
  reduction.enumerationCap = cap;
  reduction.delta = deltaText.empty()
                        ? KnapsackPartitionReduction::chooseDelta(
                              instance.problem->numRequirements(), cap)
                        : costOption(deltaText, "--delta");
  PartSelection selection =
      mode == "rand" ? PartSelection::Randomized : PartSelection::Deterministic;
  MaxMinRunReport report = solveMaxMinAuto(instance, reduction, selection, effectiveSeed(seed));

  if (!emitMatroids.empty()) {
    if (!instance.uncertainty.knapsack) {
      std::cerr << "note: no knapsack constraints, nothing to emit\n";
    } else {
      NormalizedKnapsack normalized = normalizeKnapsacks(*instance.uncertainty.knapsack);
      SingleKnapsack combined = combineKnapsacks(normalized.set);
      KnapsackPartitionReduction red(std::move(combined.weights), combined.capacity, reduction);
      std::ostringstream lines;
      red.forEachComposition([&](const std::vector<int>& composition) {
        PartitionMatroid matroid = red.matroidFor(composition);
        json line;
        line["tau"] = composition;
        json bounds = json::array();
        for (int b : matroid.bounds()) {
          if (b == PartitionMatroid::kUnbounded) {
            bounds.push_back(nullptr);
          } else {
            bounds.push_back(b);
          }
        }
        line["bounds"] = std::move(bounds);
        lines << line.dump() << "\n";
      });
      std::ofstream out(emitMatroids);
      if (!out) throw ParseError("cannot open matroid dump file '" + emitMatroids + "'");
      out << lines.str();
    }
  }

  json result;
  result["algorithm"] = report.algorithm;
  result["scenario"] = scenarioJson(report.scenario);
  result["onlineCost"] = report.onlineCost.str();
  result["certifiedFactor"] = report.certifiedFactor;
  result["certifiedUpperBound"] = report.certifiedUpperBound.str();
  if (report.knapsack) {
    result["delta"] = report.knapsack->deltaUsed.str();
    result["weightBound"] = report.knapsack->weightBound.str();
    result["partBound"] = report.knapsack->partBound;
    result["matroidCount"] = report.knapsack->matroidCount;
  }
  if (useOracle) {
    ExactOracle oracle(*instance.problem);
    ExactMaxMin exact = oracle.maxMin(instance.uncertainty);
    Cost scenarioValue = oracle.optValue(report.scenario);
    Cost rhoOn = oracle.onlineRatioBound();
    result["exactMaxMin"] = exact.value.str();
    result["exactScenario"] = scenarioJson(exact.scenario);
    result["scenarioExactValue"] = scenarioValue.str();
    if (!exact.value.isZero()) result["ratio"] = (scenarioValue / exact.value).str();
    result["rhoOnBound"] = rhoOn.str();
  }

  if (flags.format == "json") {
    writeOutput(result.dump(2) + "\n", flags.output);
  } else {
    std::ostringstream text;
    text << "algorithm: " << report.algorithm << "\n";
    text << "scenario: " << formatIndexSet(report.scenario) << "\n";
    text << "online cost: " << report.onlineCost.str() << "\n";
    text << "certified upper bound: " << report.certifiedUpperBound.str() << " (factor "
         << report.certifiedFactor << ")\n";
    if (report.knapsack) {
      text << "reduction delta: " << report.knapsack->deltaUsed.str() << ", matroids: "
           << report.knapsack->matroidCount << ", part bound: " << report.knapsack->partBound
           << "\n";
    }
    if (result.contains("exactMaxMin")) {
      text << "exact max-min: " << result["exactMaxMin"].get<std::string>() << " at "
           << formatIndexSet(instance.uncertainty.explicitScenarios.empty()
                                 ? IndexSet(result["exactScenario"].get<IndexSet>())
                                 : IndexSet(result["exactScenario"].get<IndexSet>()))
           << "\n";
      text << "scenario exact value: " << result["scenarioExactValue"].get<std::string>() << "\n";
      if (result.contains("ratio")) {
        text << "ratio: " << result["ratio"].get<std::string>() << "\n";
      }
      text << "rho_on bound: " << result["rhoOnBound"].get<std::string>() << "\n";
    }
    writeOutput(text.str(), flags.output);
  }
  return 0;
}

int runRobust(const std::string& file, const CommonFlags& flags, bool useOracle,
              const std::string& thresholdText, const std::string& epsText,
              const std::string& rhoOnText, const std::string& deltaText, std::uint64_t cap,
              bool commitProbes) {
  RobustInstance instance = parseInstanceFile(file);
  RobustParams params;
  params.commitProbes = commitProbes;
  params.reduction.enumerationCap = cap;
  params.reduction.delta = deltaText.empty()
                               ? KnapsackPartitionReduction::chooseDelta(
                                     instance.problem->numRequirements(), cap)
                               : costOption(deltaText, "--delta");

  std::optional<ExactOracle> oracle;
  if (useOracle) {
    oracle.emplace(*instance.problem);
    params.onlineFactor = oracle->onlineRatioBound();
    params.offlineFactor = oracle->offlineRatioBound();
  }
  if (!rhoOnText.empty()) params.onlineFactor = costOption(rhoOnText, "--rho-on");

  std::optional<Cost> threshold;
  if (!thresholdText.empty()) threshold = costOption(thresholdText, "--threshold");
  Cost searchStep = epsText.empty() ? Cost(1, 10) : costOption(epsText, "--eps");

  RobustRunReport report = solveRobustAuto(instance, params, threshold, searchStep);
  const DiscriminatingOutput& output = report.solution.output;

  json result;
  result["algorithm"] = report.algorithm;
  result["threshold"] = output.threshold.str();
  result["firstStage"] = json(output.firstStage);
  result["firstStageCost"] = output.firstStageCost.str();
  result["upperBound"] = report.solution.upperBound.str();
  result["alpha1"] = output.factors.alpha1.str();
  result["beta"] = output.factors.beta.str();
  result["lambda"] = instance.lambda.str();
  result["iterations"] = output.iterations.size();
  result["gridPoints"] = report.solution.trace.size();
  if (report.objectiveLossFactor != 1) {
    result["objectiveLossFactor"] = report.objectiveLossFactor;
  }
  if (report.deltaUsed) result["delta"] = report.deltaUsed->str();

  if (oracle) {
    ExactRobust exact = oracle->robust(instance.uncertainty, instance.lambda);
    result["exactRobust"] = exact.value.str();
    result["exactFirstStageCost"] = exact.firstStageCost.str();
    result["exactSecondStageCost"] = exact.secondStageCost.str();
    result["rhoOnBound"] = params.onlineFactor.str();
    result["rhoOffBound"] = params.offlineFactor->str();
    // Per-scenario augmentation table plus the two threshold-run checks:
    // coverage and the budget bound.
    json table = json::array();
    bool coverageOk = true;
    bool budgetOk = true;
    const Cost budget = output.factors.beta * output.threshold;
    for (const Scenario& scenario : oracle->enumerateScenarios(instance.uncertainty)) {
      IndexSet augmentation = output.augment(scenario);
      Cost augmentCost = instance.problem->setCost(augmentation);
      bool covers = instance.problem->satisfiesAll(
          scenario, setUnion(output.firstStage, augmentation));
      bool inBudget = !(budget < augmentCost);
      coverageOk = coverageOk && covers;
      budgetOk = budgetOk && inBudget;
      json entry;
      entry["scenario"] = scenarioJson(scenario);
      entry["augmentation"] = json(augmentation);
      entry["cost"] = augmentCost.str();
      entry["covers"] = covers;
      entry["withinBudget"] = inBudget;
      table.push_back(std::move(entry));
    }
    result["augmentations"] = std::move(table);
    result["coverageHolds"] = coverageOk;
    result["budgetHolds"] = budgetOk;
  }

  if (flags.format == "json") {
    writeOutput(result.dump(2) + "\n", flags.output);
  } else {
    std::ostringstream text;
    text << "algorithm: " << report.algorithm << "\n";
    text << "threshold: " << output.threshold.str() << "\n";
    text << "first stage: " << formatIndexSet(output.firstStage) << " cost "
         << output.firstStageCost.str() << "\n";
    text << "upper bound: " << report.solution.upperBound.str() << " (alpha1 "
         << output.factors.alpha1.str() << ", beta " << output.factors.beta.str() << ")\n";
    text << "grid points: " << report.solution.trace.size() << "\n";
    if (report.objectiveLossFactor != 1) {
      text << "objective loss factor: " << report.objectiveLossFactor << "\n";
    }
    if (result.contains("exactRobust")) {
      text << "exact robust optimum: " << result["exactRobust"].get<std::string>() << "\n";
      text << "coverage holds: " << (result["coverageHolds"].get<bool>() ? "yes" : "no") << "\n";
      text << "budget holds: " << (result["budgetHolds"].get<bool>() ? "yes" : "no") << "\n";
    }
    writeOutput(text.str(), flags.output);
  }
  return 0;
}

int runOracle(const std::string& file, const CommonFlags& flags, const std::string& op,
              const std::string& xText, const std::string& sText, int declaredP,
              const ExactBudget& budget) {
  RobustInstance instance = parseInstanceFile(file);
  json result;
  if (op == "psystem") {
    PSystemCheck check = verifyPSystem(*instance.uncertainty.system,
                                       declaredP > 0 ? declaredP
                                                     : instance.uncertainty.pValue(),
                                       budget);
    result["op"] = "psystem";
    result["declared"] = declaredP > 0 ? declaredP : instance.uncertainty.pValue();
    result["holds"] = check.holds;
    result["smallestValid"] = check.smallestValid;
  } else {
    ExactOracle oracle(*instance.problem, budget);
    if (op == "optaug") {
      ExactAugmentation aug = oracle.optAug(indexListOption(xText, "--x"),
                                            indexListOption(sText, "--s"));
      result["op"] = "optaug";
      result["cost"] = aug.cost.str();
      result["witness"] = json(aug.witness);
    } else if (op == "maxmin") {
      ExactMaxMin exact = oracle.maxMin(instance.uncertainty);
      result["op"] = "maxmin";
      result["value"] = exact.value.str();
      result["scenario"] = scenarioJson(exact.scenario);
    } else if (op == "robust") {
      ExactRobust exact = oracle.robust(instance.uncertainty, instance.lambda);
      result["op"] = "robust";
      result["value"] = exact.value.str();
      result["firstStage"] = json(exact.firstStage);
      result["firstStageCost"] = exact.firstStageCost.str();
      result["secondStageCost"] = exact.secondStageCost.str();
    } else {
      throw ParseError("unknown oracle op '" + op + "'");
    }
  }
  if (flags.format == "json") {
    writeOutput(result.dump(2) + "\n", flags.output);
  } else {
    std::ostringstream text;
    for (auto it = result.begin(); it != result.end(); ++it) {
      text << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
    }
    writeOutput(text.str(), flags.output);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"max-min and two-stage robust covering toolkit"};
  app.require_subcommand(1);

  CommonFlags flags;
  app.add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"human", "json", "csv"}));
  app.add_option("-o,--output", flags.output, "Write output to a file instead of stdout");

  // maxmin
  auto* maxmin = app.add_subcommand("maxmin", "Adversarial scenario for an instance");
  std::string maxminFile;
  bool maxminOracle = false;
  std::string maxminDelta, maxminMode = "det", maxminEmit;
  std::uint64_t maxminCap = 100000, maxminSeed = 0;
  maxmin->add_option("file", maxminFile, "Instance file")->required();
  maxmin->add_flag("--oracle", maxminOracle, "Compare against the exact oracle");
  maxmin->add_option("--delta", maxminDelta, "Reduction accuracy parameter in (0,1]");
  maxmin->add_option("--cap", maxminCap, "Matroid enumeration cap");
  maxmin->add_option("--mode", maxminMode, "Part selection: det or rand")
      ->check(CLI::IsMember({"det", "rand"}));
  maxmin->add_option("--seed", maxminSeed, "Seed for randomized part selection");
  maxmin->add_option("--emit-matroids", maxminEmit, "Dump reduction matroids to a file");

  // robust
  auto* robust = app.add_subcommand("robust", "Two-stage robust solution for an instance");
  std::string robustFile, robustThreshold, robustEps, robustRhoOn, robustDelta;
  bool robustOracle = false, robustCommitProbes = false;
  std::uint64_t robustCap = 100000;
  robust->add_option("file", robustFile, "Instance file")->required();
  robust->add_flag("--oracle", robustOracle, "Use oracle ratio bounds and report exact values");
  robust->add_option("--threshold", robustThreshold, "Run a single threshold instead of searching");
  robust->add_option("--eps", robustEps, "Threshold grid growth step (default 1/10)");
  robust->add_option("--rho-on", robustRhoOn, "Online factor for the loop exit test");
  robust->add_option("--delta", robustDelta, "Reduction accuracy parameter in (0,1]");
  robust->add_option("--cap", robustCap, "Matroid enumeration cap");
  robust->add_flag("--commit-probes", robustCommitProbes,
                   "Union variant: feed every per-system probe, not only the winner");

  // oracle
  auto* oracleCmd = app.add_subcommand("oracle", "Exact brute-force solvers");
  std::string oracleFile, oracleOp = "maxmin", oracleX, oracleS;
  int oracleDeclaredP = 0;
  ExactBudget budget;
  oracleCmd->add_option("file", oracleFile, "Instance file")->required();
  oracleCmd->add_option("--op", oracleOp, "optaug | maxmin | robust | psystem")
      ->check(CLI::IsMember({"optaug", "maxmin", "robust", "psystem"}));
  oracleCmd->add_option("--x", oracleX, "Requirement indices, comma separated");
  oracleCmd->add_option("--s", oracleS, "Owned element indices, comma separated");
  oracleCmd->add_option("--declared-p", oracleDeclaredP, "p value to verify");
  oracleCmd->add_option("--max-elements", budget.maxElements, "Element budget");
  oracleCmd->add_option("--max-requirements", budget.maxRequirements, "Requirement budget");
  oracleCmd->add_option("--max-scenarios", budget.maxScenarios, "Scenario budget");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  GeneratorSpec genSpec;
  std::string genLambda = "1";
  gen->add_option("--family", genSpec.family, "setcover | steiner")
      ->check(CLI::IsMember({"setcover", "steiner"}));
  gen->add_option("--n", genSpec.requirements, "Requirement count");
  gen->add_option("--m", genSpec.elements, "Element count / edge budget");
  gen->add_option("--vertices", genSpec.vertices, "Steiner vertex count");
  gen->add_option("--seed", genSpec.seed, "Generator seed");
  gen->add_option("--cover-percent", genSpec.coverPercent, "Set membership chance");
  gen->add_option("--edge-percent", genSpec.edgePercent, "Extra edge chance");
  gen->add_option("--unc", genSpec.uncertainty,
                  "uniform | partition | intersect2 | knapsack | and | explicit");
  gen->add_option("--k", genSpec.uniformBound, "Uniform matroid bound");
  gen->add_option("--parts", genSpec.partitionParts, "Partition matroid part count");
  gen->add_option("--q", genSpec.knapsackConstraints, "Knapsack constraint count");
  gen->add_option("--scenarios", genSpec.explicitScenarios, "Explicit scenario count");
  gen->add_option("--lambda", genLambda, "Inflation parameter");

  // bench
  auto* bench = app.add_subcommand("bench", "Experiment harness emitting CSV");
  std::string benchSpecFile;
  bool benchTiming = false;
  bench->add_option("spec", benchSpecFile, "Bench spec file")->required();
  bench->add_flag("--timing", benchTiming,
                  "Fill the runtime column (off by default to keep output reproducible)");

  for (CLI::App* sub : {maxmin, robust, oracleCmd, gen, bench}) {
    sub->fallthrough();  // let --format / -o appear after the subcommand
  }

  try {
    app.parse(argc, argv);

    if (maxmin->parsed()) {
      checkFormat(flags, false);
      return runMaxMin(maxminFile, flags, maxminOracle, maxminDelta, maxminCap, maxminMode,
                       maxminSeed, maxminEmit);
    }
    if (robust->parsed()) {
      checkFormat(flags, false);
      return runRobust(robustFile, flags, robustOracle, robustThreshold, robustEps, robustRhoOn,
                       robustDelta, robustCap, robustCommitProbes);
    }
    if (oracleCmd->parsed()) {
      checkFormat(flags, false);
      return runOracle(oracleFile, flags, oracleOp, oracleX, oracleS, oracleDeclaredP, budget);
    }
    if (gen->parsed()) {
      checkFormat(flags, false);
      genSpec.seed = effectiveSeed(genSpec.seed);
      genSpec.lambda = costOption(genLambda, "--lambda");
      RobustInstance instance = generateInstance(genSpec);
      writeOutput(serializeInstance(instance), flags.output);
      return 0;
    }
    if (bench->parsed()) {
      std::ifstream in(benchSpecFile);
      if (!in) throw ParseError("cannot open bench spec '" + benchSpecFile + "'");
      std::stringstream buffer;
      buffer << in.rdbuf();
      std::optional<std::uint64_t> seedOverride;
      if (const char* env = std::getenv("ROBUSTCOVER_SEED")) {
        seedOverride = std::strtoull(env, nullptr, 10);
      }
      BenchSpec spec = parseBenchSpec(buffer.str(), seedOverride);
      std::ostringstream csv;
      csv << benchCsvHeader() << "\n";
      for (const BenchRow& row : runBench(spec, benchTiming)) {
        csv << benchCsvRow(row) << "\n";
      }
      writeOutput(csv.str(), flags.output);
      return 0;
    }
    return 0;
  } catch (const CLI::ParseError& error) {
    int code = app.exit(error);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& error) {
    std::cerr << "input error: " << error.what() << "\n";
    return 2;
  } catch (const InvalidInstance& error) {
    std::cerr << "input error: " << error.what() << "\n";
    return 2;
  } catch (const Error& error) {
    std::cerr << "solver error: " << error.what() << "\n";
    return 1;
  }
}
