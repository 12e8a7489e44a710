#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "multitree/errors.hpp"

namespace multitree {

using Weight = std::int64_t;

struct Edge {
  int u = 0;
  int v = 0;
  Weight w = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A forest on vertices 0..n-1 whose edges carry positive integer weights.
/// Equivalently a multigraph whose underlying simple graph is a forest; the
/// total weight is the number of multigraph edges. Immutable after
/// construction, so values can be shared freely across threads.
class WeightedForest {
 public:
  /// Validates and normalizes the edge list (u < v per edge, edges sorted).
  /// Throws VertexOutOfRange, NonPositiveWeightError, DuplicateEdgeError or
  /// CycleError when the input is not a weighted forest.
  WeightedForest(int n, std::vector<Edge> edges);

  /// The empty graph on n isolated vertices.
  static WeightedForest isolated(int n) { return WeightedForest(n, {}); }

  int order() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  Weight total_weight() const { return total_weight_; }
  int component_count() const { return n_ - static_cast<int>(edges_.size()); }
  bool is_tree() const { return component_count() == 1; }

  int degree(int v) const;

  /// Adjacency lists; entry (neighbor, weight). Built on demand.
  std::vector<std::vector<std::pair<int, Weight>>> adjacency() const;

  /// Vertex sets of the connected components, each sorted ascending;
  /// components ordered by smallest vertex.
  std::vector<std::vector<int>> components() const;

  friend bool operator==(const WeightedForest&, const WeightedForest&) = default;

 private:
  int n_;
  std::vector<Edge> edges_;
  Weight total_weight_ = 0;
};

/// Non-increasing multiset of positive integers; the edge weights of a
/// forest sorted in non-increasing order.
class WeightSequence {
 public:
  WeightSequence() = default;
  /// Sorts the given weights non-increasing. Throws NonPositiveWeightError
  /// on entries < 1.
  explicit WeightSequence(std::vector<Weight> weights);

  const std::vector<Weight>& values() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  Weight sum() const;

  friend bool operator==(const WeightSequence&, const WeightSequence&) = default;
  friend auto operator<=>(const WeightSequence& a, const WeightSequence& b) {
    return a.weights_ <=> b.weights_;
  }

 private:
  std::vector<Weight> weights_;
};

WeightedForest new_forest(int n, std::vector<Edge> edges);

WeightSequence weight_sequence(const WeightedForest& f);

/// Removes pendant vertex v, and then also its neighbor u, relabeling
/// vertices consecutively. Returns (F - v, F - v - u). Throws
/// NotPendantError unless deg(v) == 1.
std::pair<WeightedForest, WeightedForest> delete_pendant_pair(
    const WeightedForest& f, int v);

/// The forest induced on the kept vertices (relabeled consecutively in
/// ascending old-label order). `keep` must be a subset of 0..n-1.
WeightedForest induced_subforest(const WeightedForest& f,
                                 const std::vector<int>& keep);

}  // namespace multitree
