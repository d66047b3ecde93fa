#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "robustcover/covering.hpp"
#include "robustcover/uncertainty.hpp"

namespace robustcover {

/// Declarative, file-shaped description of an uncertainty set. Kept next
/// to the built runtime objects so instances round-trip through the text
/// format byte for byte.
struct UncertaintyDesc {
  std::string tag;  // uniform | partition | graphic | intersection | explicit | knapsack | and

  int uniformBound = 0;

  std::vector<IndexSet> parts;  // partition
  std::vector<int> bounds;      // PartitionMatroid::kUnbounded encodes null

  int graphVertices = 0;
  std::vector<std::pair<int, int>> graphEdges;

  std::vector<UncertaintyDesc> children;  // intersection | and

  std::vector<IndexSet> maximalSets;  // explicit
  std::optional<int> declaredP;

  std::vector<std::vector<Cost>> weights;  // knapsack
  std::vector<Cost> capacities;
};

/// A parsed instance document: the covering problem, the uncertainty set
/// (both declarative and built), and the inflation parameter.
struct RobustInstance {
  std::shared_ptr<const CoveringProblem> problem;
  UncertaintyDesc uncertaintyDesc;
  UncertaintySet uncertainty;
  Cost lambda{1};
};

/// Builds the runtime uncertainty set for a description over n
/// requirement indices.
UncertaintySet buildUncertainty(const UncertaintyDesc& desc, int numRequirements);

/// Parses an instance document. Unknown keys are rejected with the
/// offending key named; non-integer numeric values must be written as
/// strings ("2/5" or "0.4") so conversion stays exact.
RobustInstance parseInstanceText(const std::string& text);
RobustInstance parseInstanceFile(const std::string& path);

/// Canonical serialization; parse(serialize(x)) reproduces x.
std::string serializeInstance(const RobustInstance& instance);

}  // namespace robustcover
