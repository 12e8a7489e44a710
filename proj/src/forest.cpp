#include "multitree/forest.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace multitree {

namespace {

// Union-find over 0..n-1, path halving.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // Returns false if x and y were already connected.
  bool unite(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return false;
    parent_[rx] = ry;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

WeightedForest::WeightedForest(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw ParameterError("vertex count must be nonnegative");
  for (auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw VertexOutOfRange("edge endpoint outside 0.." +
                             std::to_string(n - 1));
    if (e.u == e.v)
      throw CycleError("loop at vertex " + std::to_string(e.u));
    if (e.w < 1)
      throw NonPositiveWeightError("edge weight must be a positive integer");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i - 1].u == edges[i].u && edges[i - 1].v == edges[i].v)
      throw DuplicateEdgeError("repeated vertex pair (" +
                               std::to_string(edges[i].u) + "," +
                               std::to_string(edges[i].v) + ")");
  }
  DisjointSets ds(n);
  for (const auto& e : edges) {
    if (!ds.unite(e.u, e.v))
      throw CycleError("edge (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ") closes a cycle");
  }
  edges_ = std::move(edges);
  for (const auto& e : edges_) total_weight_ += e.w;
}

int WeightedForest::degree(int v) const {
  if (v < 0 || v >= n_) throw VertexOutOfRange("no vertex " + std::to_string(v));
  int d = 0;
  for (const auto& e : edges_)
    if (e.u == v || e.v == v) ++d;
  return d;
}

std::vector<std::vector<std::pair<int, Weight>>> WeightedForest::adjacency()
    const {
  std::vector<std::vector<std::pair<int, Weight>>> adj(n_);
  for (const auto& e : edges_) {
    adj[e.u].emplace_back(e.v, e.w);
    adj[e.v].emplace_back(e.u, e.w);
  }
  return adj;
}

std::vector<std::vector<int>> WeightedForest::components() const {
  DisjointSets ds(n_);
  for (const auto& e : edges_) ds.unite(e.u, e.v);
  std::vector<std::vector<int>> byroot(n_);
  for (int v = 0; v < n_; ++v) byroot[ds.find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& grp : byroot)
    if (!grp.empty()) out.push_back(std::move(grp));
  // byroot scan order already yields components sorted by smallest vertex
  return out;
}

WeightSequence::WeightSequence(std::vector<Weight> weights)
    : weights_(std::move(weights)) {
  for (Weight w : weights_)
    if (w < 1)
      throw NonPositiveWeightError("weight sequence entries must be >= 1");
  std::sort(weights_.begin(), weights_.end(), std::greater<>());
}

Weight WeightSequence::sum() const {
  return std::accumulate(weights_.begin(), weights_.end(), Weight{0});
}

WeightedForest new_forest(int n, std::vector<Edge> edges) {
  return WeightedForest(n, std::move(edges));
}

WeightSequence weight_sequence(const WeightedForest& f) {
  std::vector<Weight> ws;
  ws.reserve(f.edges().size());
  for (const auto& e : f.edges()) ws.push_back(e.w);
  return WeightSequence(std::move(ws));
}

WeightedForest induced_subforest(const WeightedForest& f,
                                 const std::vector<int>& keep) {
  std::vector<int> newlabel(f.order(), -1);
  int next = 0;
  std::vector<int> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  for (int v : sorted) {
    if (v < 0 || v >= f.order())
      throw VertexOutOfRange("kept vertex " + std::to_string(v));
    if (newlabel[v] != -1)
      throw ParameterError("kept vertex listed twice: " + std::to_string(v));
    newlabel[v] = next++;
  }
  std::vector<Edge> edges;
  for (const auto& e : f.edges())
    if (newlabel[e.u] != -1 && newlabel[e.v] != -1)
      edges.push_back({newlabel[e.u], newlabel[e.v], e.w});
  return WeightedForest(next, std::move(edges));
}

std::pair<WeightedForest, WeightedForest> delete_pendant_pair(
    const WeightedForest& f, int v) {
  if (v < 0 || v >= f.order())
    throw VertexOutOfRange("no vertex " + std::to_string(v));
  if (f.degree(v) != 1)
    throw NotPendantError("vertex " + std::to_string(v) +
                          " has degree != 1");
  int u = -1;
  for (const auto& e : f.edges()) {
    if (e.u == v) u = e.v;
    if (e.v == v) u = e.u;
  }
  std::vector<int> keep1, keep2;
  for (int x = 0; x < f.order(); ++x) {
    if (x != v) keep1.push_back(x);
    if (x != v && x != u) keep2.push_back(x);
  }
  return {induced_subforest(f, keep1), induced_subforest(f, keep2)};
}

}  // namespace multitree
