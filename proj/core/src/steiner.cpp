#include "robustcover/steiner.hpp"

#include <numeric>

#include "robustcover/errors.hpp"

namespace robustcover {

namespace {

class EdgeComponents {
 public:
  explicit EdgeComponents(int n) : parent_(static_cast<size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int v) {
    while (parent_[static_cast<size_t>(v)] != v) {
      parent_[static_cast<size_t>(v)] =
          parent_[static_cast<size_t>(parent_[static_cast<size_t>(v)])];
      v = parent_[static_cast<size_t>(v)];
    }
    return v;
  }

  void unite(int u, int v) { parent_[static_cast<size_t>(find(u))] = find(v); }

 private:
  std::vector<int> parent_;
};

class SteinerRun final : public OnlineRun {
 public:
  explicit SteinerRun(const SteinerTreeProblem& problem)
      : OnlineRun(problem), problem_(&problem) {}

  std::unique_ptr<OnlineRun> clone() const override {
    return std::unique_ptr<OnlineRun>(new SteinerRun(*this));
  }

 protected:
  IndexSet buy(int requirement) override {
    auto paths = problem_->shortestPathsFrom(problem_->root(), ownedElements());
    int target = problem_->terminal(requirement);
    if (!paths.reached[static_cast<size_t>(target)]) {
      throw InfeasibleRequirement("terminal for requirement " + std::to_string(requirement) +
                                  " is unreachable");
    }
    IndexSet bought;
    int v = target;
    while (paths.parentEdge[static_cast<size_t>(v)] >= 0) {
      int e = paths.parentEdge[static_cast<size_t>(v)];
      if (!setContains(ownedElements(), e)) insertIndex(bought, e);
      const auto& [a, b] = problem_->edge(e);
      v = (v == a) ? b : a;
    }
    return bought;
  }

 private:
  const SteinerTreeProblem* problem_;
};

}  // namespace

SteinerTreeProblem::SteinerTreeProblem(int vertexCount, int root,
                                       std::vector<std::pair<int, int>> edgeEndpoints,
                                       std::vector<Cost> edgeCosts, std::vector<int> terminals)
    : CoveringProblem(std::move(edgeCosts), static_cast<int>(terminals.size())),
      vertexCount_(vertexCount),
      root_(root),
      edges_(std::move(edgeEndpoints)),
      terminals_(std::move(terminals)) {
  if (edges_.size() != costs_.size()) throw InvalidInstance("each edge needs a cost");
  if (root_ < 0 || root_ >= vertexCount_) throw InvalidInstance("root vertex out of range");
  for (const auto& [u, v] : edges_) {
    if (u < 0 || u >= vertexCount_ || v < 0 || v >= vertexCount_) {
      throw InvalidInstance("edge endpoint out of range");
    }
  }
  for (int t : terminals_) {
    if (t < 0 || t >= vertexCount_) throw InvalidInstance("terminal vertex out of range");
  }
  incident_.assign(static_cast<size_t>(vertexCount_), {});
  for (int e = 0; e < numElements(); ++e) {
    const auto& [u, v] = edges_[static_cast<size_t>(e)];
    incident_[static_cast<size_t>(u)].push_back(e);
    if (v != u) incident_[static_cast<size_t>(v)].push_back(e);
  }
}

int SteinerTreeProblem::otherEndpoint(int e, int v) const {
  const auto& [a, b] = edges_[static_cast<size_t>(e)];
  return v == a ? b : a;
}

bool SteinerTreeProblem::satisfies(int requirement, const IndexSet& solution) const {
  EdgeComponents components(vertexCount_);
  for (int e : solution) {
    const auto& [u, v] = edges_[static_cast<size_t>(e)];
    components.unite(u, v);
  }
  return components.find(terminal(requirement)) == components.find(root_);
}

SteinerTreeProblem::ShortestPaths SteinerTreeProblem::shortestPathsFrom(
    int source, const IndexSet& owned) const {
  ShortestPaths out;
  out.dist.assign(static_cast<size_t>(vertexCount_), Cost(0));
  out.parentEdge.assign(static_cast<size_t>(vertexCount_), -1);
  out.reached.assign(static_cast<size_t>(vertexCount_), 0);
  std::vector<char> done(static_cast<size_t>(vertexCount_), 0);
  out.reached[static_cast<size_t>(source)] = 1;
  for (;;) {
    int u = -1;
    for (int v = 0; v < vertexCount_; ++v) {
      if (!done[static_cast<size_t>(v)] && out.reached[static_cast<size_t>(v)] &&
          (u < 0 || out.dist[static_cast<size_t>(v)] < out.dist[static_cast<size_t>(u)])) {
        u = v;
      }
    }
    if (u < 0) break;
    done[static_cast<size_t>(u)] = 1;
    for (int e : incident_[static_cast<size_t>(u)]) {
      int v = otherEndpoint(e, u);
      if (v == u) continue;
      Cost step = setContains(owned, e) ? Cost(0) : elementCost(e);
      Cost candidate = out.dist[static_cast<size_t>(u)] + step;
      if (!out.reached[static_cast<size_t>(v)] || candidate < out.dist[static_cast<size_t>(v)]) {
        out.reached[static_cast<size_t>(v)] = 1;
        out.dist[static_cast<size_t>(v)] = candidate;
        out.parentEdge[static_cast<size_t>(v)] = e;
      }
    }
  }
  return out;
}

IndexSet SteinerTreeProblem::offlineAugment(const IndexSet& requirements,
                                            const IndexSet& owned) const {
  IndexSet nodes{root_};
  for (int i : requirements) insertIndex(nodes, terminal(i));
  if (nodes.size() <= 1) return {};

  // Metric closure with owned edges contracted to cost zero, then a
  // minimum spanning tree over it, mapped back to the underlying paths.
  std::vector<ShortestPaths> paths;
  paths.reserve(nodes.size());
  for (int v : nodes) paths.push_back(shortestPathsFrom(v, owned));

  const size_t count = nodes.size();
  std::vector<char> inTree(count, 0);
  std::vector<Cost> best(count, Cost(0));
  std::vector<int> attach(count, -1);
  size_t rootPos = 0;
  for (size_t i = 0; i < count; ++i) {
    if (nodes[i] == root_) rootPos = i;
  }
  inTree[rootPos] = 1;
  for (size_t i = 0; i < count; ++i) {
    if (inTree[i]) continue;
    if (!paths[rootPos].reached[static_cast<size_t>(nodes[i])]) {
      throw InfeasibleRequirement("terminal is disconnected from the root");
    }
    best[i] = paths[rootPos].dist[static_cast<size_t>(nodes[i])];
    attach[i] = static_cast<int>(rootPos);
  }

  IndexSet result;
  for (size_t added = 1; added < count; ++added) {
    size_t next = count;
    for (size_t i = 0; i < count; ++i) {
      if (inTree[i]) continue;
      if (next == count || best[i] < best[next]) next = i;
    }
    inTree[next] = 1;
    // Walk the closure edge back along the attach node's shortest paths.
    const ShortestPaths& fromAttach = paths[static_cast<size_t>(attach[next])];
    int v = nodes[next];
    while (fromAttach.parentEdge[static_cast<size_t>(v)] >= 0) {
      int e = fromAttach.parentEdge[static_cast<size_t>(v)];
      if (!setContains(owned, e)) insertIndex(result, e);
      v = otherEndpoint(e, v);
    }
    for (size_t i = 0; i < count; ++i) {
      if (inTree[i]) continue;
      const Cost& d = paths[next].dist[static_cast<size_t>(nodes[i])];
      if (paths[next].reached[static_cast<size_t>(nodes[i])] && d < best[i]) {
        best[i] = d;
        attach[i] = static_cast<int>(next);
      }
    }
  }
  return result;
}

std::unique_ptr<OnlineRun> SteinerTreeProblem::startOnline() const {
  return std::make_unique<SteinerRun>(*this);
}

void SteinerTreeProblem::validate() const {
  CoveringProblem::validate();
  EdgeComponents components(vertexCount_);
  for (int e = 0; e < numElements(); ++e) {
    const auto& [u, v] = edges_[static_cast<size_t>(e)];
    components.unite(u, v);
  }
  for (int v = 0; v < vertexCount_; ++v) {
    if (components.find(v) != components.find(root_)) {
      throw InvalidInstance("graph is not connected");
    }
  }
}

}  // namespace robustcover
