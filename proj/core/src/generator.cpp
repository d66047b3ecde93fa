#include "robustcover/generator.hpp"

#include "robustcover/errors.hpp"
#include "robustcover/rng.hpp"
#include "robustcover/setcover.hpp"
#include "robustcover/steiner.hpp"

namespace robustcover {

namespace {

std::shared_ptr<const CoveringProblem> generateSetCover(const GeneratorSpec& spec,
                                                        DeterministicRng& rng) {
  const int n = spec.requirements;
  std::vector<Cost> costs;
  std::vector<IndexSet> sets;
  for (int j = 0; j < spec.elements; ++j) {
    IndexSet members;
    for (int i = 0; i < n; ++i) {
      if (rng.chancePercent(spec.coverPercent)) members.push_back(i);
    }
    costs.push_back(rng.uniformCost());
    sets.push_back(std::move(members));
  }
  // Patch items no set covers with singletons so the instance stays valid.
  std::vector<char> covered(static_cast<size_t>(n), 0);
  for (const IndexSet& s : sets) {
    for (int i : s) covered[static_cast<size_t>(i)] = 1;
  }
  for (int i = 0; i < n; ++i) {
    if (!covered[static_cast<size_t>(i)]) {
      costs.push_back(rng.uniformCost());
      sets.push_back({i});
    }
  }
  auto problem = std::make_shared<SetCoverProblem>(n, std::move(costs), std::move(sets));
  problem->validate();
  return problem;
}

std::shared_ptr<const CoveringProblem> generateSteiner(const GeneratorSpec& spec,
                                                       DeterministicRng& rng) {
  const int n = spec.requirements;
  const int vertices = spec.vertices > 0 ? spec.vertices : n + 2;
  if (n > vertices - 1) {
    throw PreconditionError("steiner generator needs at least requirements + 1 vertices");
  }
  std::vector<std::pair<int, int>> endpoints;
  std::vector<Cost> costs;
  // A random spanning tree keeps the graph connected; extra edges fill
  // the remaining edge budget.
  for (int v = 1; v < vertices; ++v) {
    endpoints.emplace_back(rng.uniformInt(0, v - 1), v);
    costs.push_back(rng.uniformCost());
  }
  for (int u = 0; u < vertices && static_cast<int>(endpoints.size()) < spec.elements; ++u) {
    for (int v = u + 1; v < vertices && static_cast<int>(endpoints.size()) < spec.elements; ++v) {
      bool present = false;
      for (const auto& [a, b] : endpoints) {
        if ((a == u && b == v) || (a == v && b == u)) {
          present = true;
          break;
        }
      }
      if (!present && rng.chancePercent(spec.edgePercent)) {
        endpoints.emplace_back(u, v);
        costs.push_back(rng.uniformCost());
      }
    }
  }
  // Terminals are distinct non-root vertices.
  IndexSet pool = indexRange(vertices);
  pool.erase(pool.begin());  // drop the root, vertex 0
  std::vector<int> terminals;
  for (int i = 0; i < n; ++i) {
    int pick = rng.uniformInt(0, static_cast<int>(pool.size()) - 1);
    terminals.push_back(pool[static_cast<size_t>(pick)]);
    pool.erase(pool.begin() + pick);
  }
  auto problem = std::make_shared<SteinerTreeProblem>(vertices, 0, std::move(endpoints),
                                                      std::move(costs), std::move(terminals));
  problem->validate();
  return problem;
}

UncertaintyDesc generatePartitionDesc(int n, int parts, DeterministicRng& rng) {
  UncertaintyDesc desc;
  desc.tag = "partition";
  desc.parts.assign(static_cast<size_t>(parts), {});
  for (int i = 0; i < n; ++i) {
    desc.parts[static_cast<size_t>(rng.uniformInt(0, parts - 1))].push_back(i);
  }
  desc.bounds.assign(static_cast<size_t>(parts), 1);
  return desc;
}

UncertaintyDesc generateKnapsackDesc(int n, int q, DeterministicRng& rng) {
  UncertaintyDesc desc;
  desc.tag = "knapsack";
  for (int j = 0; j < q; ++j) {
    std::vector<Cost> weights;
    for (int i = 0; i < n; ++i) weights.emplace_back(rng.uniformInt(10, 60), 100);
    desc.weights.push_back(std::move(weights));
    desc.capacities.emplace_back(1);
  }
  return desc;
}

UncertaintyDesc generateUncertainty(const GeneratorSpec& spec, int n, DeterministicRng& rng) {
  if (spec.uncertainty == "uniform") {
    UncertaintyDesc desc;
    desc.tag = "uniform";
    desc.uniformBound = spec.uniformBound;
    return desc;
  }
  if (spec.uncertainty == "partition") {
    return generatePartitionDesc(n, std::max(1, spec.partitionParts), rng);
  }
  if (spec.uncertainty == "intersect2") {
    UncertaintyDesc desc;
    desc.tag = "intersection";
    desc.children.push_back(generatePartitionDesc(n, std::max(1, spec.partitionParts), rng));
    desc.children.push_back(generatePartitionDesc(n, std::max(1, spec.partitionParts), rng));
    return desc;
  }
  if (spec.uncertainty == "knapsack") {
    return generateKnapsackDesc(n, std::max(1, spec.knapsackConstraints), rng);
  }
  if (spec.uncertainty == "and") {
    UncertaintyDesc desc;
    desc.tag = "and";
    UncertaintyDesc uniform;
    uniform.tag = "uniform";
    uniform.uniformBound = spec.uniformBound;
    desc.children.push_back(std::move(uniform));
    desc.children.push_back(generateKnapsackDesc(n, std::max(1, spec.knapsackConstraints), rng));
    return desc;
  }
  if (spec.uncertainty == "explicit") {
    UncertaintyDesc desc;
    desc.tag = "explicit";
    for (int s = 0; s < spec.explicitScenarios; ++s) {
      IndexSet scenario;
      for (int i = 0; i < n; ++i) {
        if (rng.chancePercent(40)) scenario.push_back(i);
      }
      desc.maximalSets.push_back(std::move(scenario));
    }
    return desc;
  }
  throw PreconditionError("unknown uncertainty family '" + spec.uncertainty + "'");
}

}  // namespace

RobustInstance generateInstance(const GeneratorSpec& spec) {
  if (spec.requirements < 0 || spec.elements < 0) {
    throw PreconditionError("generator sizes must be nonnegative");
  }
  DeterministicRng rng(spec.seed);
  RobustInstance instance;
  if (spec.family == "setcover") {
    instance.problem = generateSetCover(spec, rng);
  } else if (spec.family == "steiner") {
    instance.problem = generateSteiner(spec, rng);
  } else {
    throw PreconditionError("unknown problem family '" + spec.family + "'");
  }
  instance.uncertaintyDesc = generateUncertainty(spec, instance.problem->numRequirements(), rng);
  instance.uncertainty =
      buildUncertainty(instance.uncertaintyDesc, instance.problem->numRequirements());
  instance.lambda = spec.lambda;
  return instance;
}

}  // namespace robustcover
