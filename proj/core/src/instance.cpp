#include "robustcover/instance.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "robustcover/errors.hpp"
#include "robustcover/setcover.hpp"
#include "robustcover/steiner.hpp"

namespace robustcover {

namespace {

using nlohmann::json;

void requireObject(const json& value, const std::string& where) {
  if (!value.is_object()) throw ParseError(where + " must be an object");
}

void checkKeys(const json& object, const std::vector<std::string>& allowed,
               const std::string& where) {
  for (auto it = object.begin(); it != object.end(); ++it) {
    bool known = false;
    for (const std::string& key : allowed) {
      if (it.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) throw ParseError("unknown key '" + it.key() + "' in " + where);
  }
}

const json& requireKey(const json& object, const std::string& key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) throw ParseError("missing key '" + key + "' in " + where);
  return *it;
}

int parseInt(const json& value, const std::string& where) {
  if (!value.is_number_integer()) throw ParseError(where + " must be an integer");
  return value.get<int>();
}

Cost parseCost(const json& value, const std::string& where) {
  if (value.is_number_integer()) return Cost(value.get<std::int64_t>());
  if (value.is_string()) {
    if (auto parsed = Cost::parse(value.get<std::string>())) return *parsed;
    throw ParseError(where + " is not a valid rational (use forms like \"2/5\" or \"0.4\")");
  }
  if (value.is_number()) {
    throw ParseError(where +
                     " must be an integer or a string; write non-integer values as "
                     "\"2/5\" or \"0.4\" so conversion stays exact");
  }
  throw ParseError(where + " must be a number or a rational string");
}

IndexSet parseIndexList(const json& value, const std::string& where) {
  if (!value.is_array()) throw ParseError(where + " must be an array of indices");
  IndexSet out;
  for (const json& item : value) out.push_back(parseInt(item, where + " entry"));
  return out;
}

json costToJson(const Cost& value) {
#ifndef ROBUSTCOVER_FLOAT_COST
  if (value.isInteger()) return json(value.numerator());
#else
  if (value.isInteger()) return json(value.floorToInt());
#endif
  return json(value.str());
}

std::shared_ptr<const CoveringProblem> parseProblem(const json& node) {
  requireObject(node, "problem");
  const std::string type = requireKey(node, "type", "problem").get<std::string>();
  if (type == "setcover") {
    checkKeys(node, {"type", "items", "sets"}, "problem");
    int items = parseInt(requireKey(node, "items", "problem"), "problem.items");
    const json& sets = requireKey(node, "sets", "problem");
    if (!sets.is_array()) throw ParseError("problem.sets must be an array");
    std::vector<Cost> costs;
    std::vector<IndexSet> members;
    for (const json& set : sets) {
      requireObject(set, "problem.sets entry");
      checkKeys(set, {"cost", "items"}, "problem.sets entry");
      costs.push_back(parseCost(requireKey(set, "cost", "set"), "set cost"));
      members.push_back(parseIndexList(requireKey(set, "items", "set"), "set items"));
    }
    auto problem = std::make_shared<SetCoverProblem>(items, std::move(costs), std::move(members));
    problem->validate();
    return problem;
  }
  if (type == "steiner") {
    checkKeys(node, {"type", "vertices", "root", "edges", "terminals"}, "problem");
    int vertices = parseInt(requireKey(node, "vertices", "problem"), "problem.vertices");
    int root = parseInt(requireKey(node, "root", "problem"), "problem.root");
    const json& edges = requireKey(node, "edges", "problem");
    if (!edges.is_array()) throw ParseError("problem.edges must be an array");
    std::vector<std::pair<int, int>> endpoints;
    std::vector<Cost> costs;
    for (const json& edge : edges) {
      requireObject(edge, "problem.edges entry");
      checkKeys(edge, {"u", "v", "cost"}, "problem.edges entry");
      endpoints.emplace_back(parseInt(requireKey(edge, "u", "edge"), "edge.u"),
                             parseInt(requireKey(edge, "v", "edge"), "edge.v"));
      costs.push_back(parseCost(requireKey(edge, "cost", "edge"), "edge cost"));
    }
    std::vector<int> terminals;
    for (const json& t : requireKey(node, "terminals", "problem")) {
      terminals.push_back(parseInt(t, "terminal"));
    }
    auto problem = std::make_shared<SteinerTreeProblem>(vertices, root, std::move(endpoints),
                                                        std::move(costs), std::move(terminals));
    problem->validate();
    return problem;
  }
  throw ParseError("unknown problem type '" + type + "'");
}

UncertaintyDesc parseUncertaintyDesc(const json& node) {
  requireObject(node, "uncertainty");
  UncertaintyDesc desc;
  desc.tag = requireKey(node, "type", "uncertainty").get<std::string>();
  if (desc.tag == "uniform") {
    checkKeys(node, {"type", "k"}, "uncertainty.uniform");
    desc.uniformBound = parseInt(requireKey(node, "k", "uncertainty.uniform"), "uniform k");
  } else if (desc.tag == "partition") {
    checkKeys(node, {"type", "parts", "bounds"}, "uncertainty.partition");
    for (const json& part : requireKey(node, "parts", "uncertainty.partition")) {
      desc.parts.push_back(parseIndexList(part, "partition part"));
    }
    for (const json& bound : requireKey(node, "bounds", "uncertainty.partition")) {
      desc.bounds.push_back(bound.is_null() ? PartitionMatroid::kUnbounded
                                            : parseInt(bound, "partition bound"));
    }
  } else if (desc.tag == "graphic") {
    checkKeys(node, {"type", "vertices", "edges"}, "uncertainty.graphic");
    desc.graphVertices =
        parseInt(requireKey(node, "vertices", "uncertainty.graphic"), "graphic vertices");
    for (const json& edge : requireKey(node, "edges", "uncertainty.graphic")) {
      IndexSet pair = parseIndexList(edge, "graphic edge");
      if (pair.size() != 2) throw ParseError("graphic edges must be [u, v] pairs");
      desc.graphEdges.emplace_back(pair[0], pair[1]);
    }
  } else if (desc.tag == "intersection" || desc.tag == "and") {
    checkKeys(node, {"type", "parts"}, "uncertainty." + desc.tag);
    const json& parts = requireKey(node, "parts", "uncertainty." + desc.tag);
    if (!parts.is_array() || parts.empty()) {
      throw ParseError("uncertainty." + desc.tag + ".parts must be a non-empty array");
    }
    for (const json& child : parts) desc.children.push_back(parseUncertaintyDesc(child));
  } else if (desc.tag == "explicit") {
    checkKeys(node, {"type", "maximalSets", "p"}, "uncertainty.explicit");
    for (const json& set : requireKey(node, "maximalSets", "uncertainty.explicit")) {
      desc.maximalSets.push_back(parseIndexList(set, "explicit scenario"));
    }
    if (auto it = node.find("p"); it != node.end()) {
      desc.declaredP = parseInt(*it, "explicit p");
    }
  } else if (desc.tag == "knapsack") {
    checkKeys(node, {"type", "weights", "capacities"}, "uncertainty.knapsack");
    for (const json& row : requireKey(node, "weights", "uncertainty.knapsack")) {
      std::vector<Cost> weights;
      for (const json& w : row) weights.push_back(parseCost(w, "knapsack weight"));
      desc.weights.push_back(std::move(weights));
    }
    for (const json& b : requireKey(node, "capacities", "uncertainty.knapsack")) {
      desc.capacities.push_back(parseCost(b, "knapsack capacity"));
    }
  } else {
    throw ParseError("unknown uncertainty type '" + desc.tag + "'");
  }
  return desc;
}

json uncertaintyToJson(const UncertaintyDesc& desc) {
  json node;
  node["type"] = desc.tag;
  if (desc.tag == "uniform") {
    node["k"] = desc.uniformBound;
  } else if (desc.tag == "partition") {
    node["parts"] = desc.parts;
    json bounds = json::array();
    for (int b : desc.bounds) {
      if (b == PartitionMatroid::kUnbounded) {
        bounds.push_back(nullptr);
      } else {
        bounds.push_back(b);
      }
    }
    node["bounds"] = std::move(bounds);
  } else if (desc.tag == "graphic") {
    node["vertices"] = desc.graphVertices;
    json edges = json::array();
    for (const auto& [u, v] : desc.graphEdges) edges.push_back(json::array({u, v}));
    node["edges"] = std::move(edges);
  } else if (desc.tag == "intersection" || desc.tag == "and") {
    json children = json::array();
    for (const UncertaintyDesc& child : desc.children) children.push_back(uncertaintyToJson(child));
    node["parts"] = std::move(children);
  } else if (desc.tag == "explicit") {
    node["maximalSets"] = desc.maximalSets;
    if (desc.declaredP) node["p"] = *desc.declaredP;
  } else if (desc.tag == "knapsack") {
    json weights = json::array();
    for (const auto& row : desc.weights) {
      json jsonRow = json::array();
      for (const Cost& w : row) jsonRow.push_back(costToJson(w));
      weights.push_back(std::move(jsonRow));
    }
    node["weights"] = std::move(weights);
    json capacities = json::array();
    for (const Cost& b : desc.capacities) capacities.push_back(costToJson(b));
    node["capacities"] = std::move(capacities);
  }
  return node;
}

/// Collects the system and knapsack halves of a description.
void collectParts(const UncertaintyDesc& desc, int n,
                  std::vector<std::shared_ptr<const IndependenceSystem>>& systems,
                  std::vector<std::vector<Cost>>& knapsackWeights,
                  std::vector<Cost>& knapsackCapacities,
                  std::vector<Scenario>* explicitScenarios) {
  if (desc.tag == "uniform") {
    systems.push_back(std::make_shared<UniformMatroid>(n, desc.uniformBound));
  } else if (desc.tag == "partition") {
    systems.push_back(std::make_shared<PartitionMatroid>(desc.parts, desc.bounds));
  } else if (desc.tag == "graphic") {
    int vertices = desc.graphVertices;
    if (vertices == 0) {
      for (const auto& [u, v] : desc.graphEdges) vertices = std::max({vertices, u + 1, v + 1});
    }
    if (static_cast<int>(desc.graphEdges.size()) != n) {
      throw ParseError("graphic uncertainty needs one edge per requirement");
    }
    systems.push_back(std::make_shared<GraphicMatroid>(vertices, desc.graphEdges));
  } else if (desc.tag == "intersection" || desc.tag == "and") {
    for (const UncertaintyDesc& child : desc.children) {
      if (child.tag == "explicit") {
        throw ParseError("explicit scenario lists cannot be combined with other parts");
      }
      if (child.tag == "knapsack" && desc.tag == "intersection") {
        throw ParseError("use type 'and' to combine a knapsack with systems");
      }
      collectParts(child, n, systems, knapsackWeights, knapsackCapacities, nullptr);
    }
  } else if (desc.tag == "explicit") {
    if (!explicitScenarios) {
      throw ParseError("explicit scenario lists cannot be nested");
    }
    *explicitScenarios = desc.maximalSets;
  } else if (desc.tag == "knapsack") {
    if (desc.weights.empty() || desc.weights.size() != desc.capacities.size()) {
      throw ParseError("knapsack uncertainty needs matching weights and capacities");
    }
    for (const auto& row : desc.weights) {
      if (static_cast<int>(row.size()) != n) {
        throw ParseError("knapsack weight vectors need one entry per requirement");
      }
      knapsackWeights.push_back(row);
    }
    for (const Cost& b : desc.capacities) knapsackCapacities.push_back(b);
  }
}

}  // namespace

UncertaintySet buildUncertainty(const UncertaintyDesc& desc, int numRequirements) {
  std::vector<std::shared_ptr<const IndependenceSystem>> systems;
  std::vector<std::vector<Cost>> knapsackWeights;
  std::vector<Cost> knapsackCapacities;
  std::vector<Scenario> explicitScenarios;
  bool isExplicit = desc.tag == "explicit";
  collectParts(desc, numRequirements, systems, knapsackWeights, knapsackCapacities,
               &explicitScenarios);
  if (isExplicit) {
    for (const Scenario& s : explicitScenarios) {
      for (int i : s) {
        if (i < 0 || i >= numRequirements) {
          throw ParseError("explicit scenario index out of range");
        }
      }
    }
    UncertaintySet set = UncertaintySet::ofScenarios(numRequirements, explicitScenarios);
    if (desc.declaredP) {
      set.system = std::make_shared<ExplicitFamily>(numRequirements, explicitScenarios,
                                                    desc.declaredP);
    }
    return set;
  }

  std::shared_ptr<const IndependenceSystem> system;
  if (systems.empty()) {
    // Knapsack-only: the system half is the free matroid.
    system = std::make_shared<UniformMatroid>(numRequirements, numRequirements);
  } else if (systems.size() == 1) {
    system = systems.front();
  } else {
    system = std::make_shared<IntersectionSystem>(std::move(systems));
  }
  if (system->groundSize() != numRequirements) {
    throw ParseError("uncertainty ground set must match the requirement count");
  }
  if (knapsackWeights.empty()) {
    return UncertaintySet::ofSystem(std::move(system));
  }
  auto knapsack = std::make_shared<KnapsackSet>(std::move(knapsackWeights),
                                                std::move(knapsackCapacities));
  return UncertaintySet::ofSystemAndKnapsack(std::move(system), std::move(knapsack));
}

RobustInstance parseInstanceText(const std::string& text) {
  json document;
  try {
    document = json::parse(text);
  } catch (const json::parse_error& error) {
    throw ParseError(std::string("invalid JSON: ") + error.what());
  }
  requireObject(document, "instance");
  checkKeys(document, {"problem", "uncertainty", "lambda"}, "instance");

  RobustInstance instance;
  instance.problem = parseProblem(requireKey(document, "problem", "instance"));
  instance.uncertaintyDesc = parseUncertaintyDesc(requireKey(document, "uncertainty", "instance"));
  instance.uncertainty =
      buildUncertainty(instance.uncertaintyDesc, instance.problem->numRequirements());
  instance.lambda = parseCost(requireKey(document, "lambda", "instance"), "lambda");
  if (instance.lambda < Cost(1)) throw ParseError("lambda must be at least one");
  return instance;
}

RobustInstance parseInstanceFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parseInstanceText(buffer.str());
}

std::string serializeInstance(const RobustInstance& instance) {
  json document;
  if (const auto* setcover = dynamic_cast<const SetCoverProblem*>(instance.problem.get())) {
    json node;
    node["type"] = "setcover";
    node["items"] = setcover->numRequirements();
    json sets = json::array();
    for (int j = 0; j < setcover->numElements(); ++j) {
      json set;
      set["cost"] = costToJson(setcover->elementCost(j));
      set["items"] = setcover->itemsOf(j);
      sets.push_back(std::move(set));
    }
    node["sets"] = std::move(sets);
    document["problem"] = std::move(node);
  } else if (const auto* steiner =
                 dynamic_cast<const SteinerTreeProblem*>(instance.problem.get())) {
    json node;
    node["type"] = "steiner";
    node["vertices"] = steiner->vertexCount();
    node["root"] = steiner->root();
    json edges = json::array();
    for (int e = 0; e < steiner->numElements(); ++e) {
      json edge;
      edge["u"] = steiner->edge(e).first;
      edge["v"] = steiner->edge(e).second;
      edge["cost"] = costToJson(steiner->elementCost(e));
      edges.push_back(std::move(edge));
    }
    node["edges"] = std::move(edges);
    json terminals = json::array();
    for (int i = 0; i < steiner->numRequirements(); ++i) terminals.push_back(steiner->terminal(i));
    node["terminals"] = std::move(terminals);
    document["problem"] = std::move(node);
  } else {
    throw Error("cannot serialize this problem kind");
  }
  document["uncertainty"] = uncertaintyToJson(instance.uncertaintyDesc);
  document["lambda"] = costToJson(instance.lambda);
  return document.dump(2) + "\n";
}

}  // namespace robustcover
