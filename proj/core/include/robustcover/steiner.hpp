#pragma once

#include <utility>

#include "robustcover/covering.hpp"

namespace robustcover {

/// Rooted Steiner tree on an undirected graph: requirements are terminals
/// to connect to the root, elements are the edges.
///
/// Offline augmentation contracts the owned edges to cost zero and buys
/// the edges of a minimum spanning tree of the metric closure on the
/// requested terminals plus the root (factor 2). The online rule buys a
/// shortest path from the arriving terminal to the current root
/// component, again with owned edges free. All shortest-path and
/// spanning-tree ties break toward the lower vertex / edge index, so runs
/// are reproducible bit for bit.
class SteinerTreeProblem final : public CoveringProblem {
 public:
  SteinerTreeProblem(int vertexCount, int root, std::vector<std::pair<int, int>> edgeEndpoints,
                     std::vector<Cost> edgeCosts, std::vector<int> terminals);

  int vertexCount() const { return vertexCount_; }
  int root() const { return root_; }
  int terminal(int requirement) const { return terminals_[static_cast<size_t>(requirement)]; }
  const std::pair<int, int>& edge(int e) const { return edges_[static_cast<size_t>(e)]; }

  bool satisfies(int requirement, const IndexSet& solution) const override;
  IndexSet offlineAugment(const IndexSet& requirements, const IndexSet& owned) const override;
  Cost offlineApproxBound() const override { return Cost(2); }
  std::unique_ptr<OnlineRun> startOnline() const override;
  std::string kind() const override { return "steiner"; }
  void validate() const override;

  struct ShortestPaths {
    std::vector<Cost> dist;
    std::vector<int> parentEdge;  // -1 at the source / unreached vertices
    std::vector<char> reached;
  };

  /// Single-source shortest paths where owned edges cost zero.
  ShortestPaths shortestPathsFrom(int source, const IndexSet& owned) const;

 private:
  int otherEndpoint(int e, int v) const;

  int vertexCount_;
  int root_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> terminals_;
  std::vector<std::vector<int>> incident_;
};

}  // namespace robustcover
