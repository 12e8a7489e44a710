#pragma once

// Test-only oracles, all deliberately independent of the library's own
// algorithms: permutation-based isomorphism, Prüfer-sequence tree
// generation, exact determinant expansion, seeded random forests.

#include <random>
#include <vector>

#include "multitree/charpoly.hpp"
#include "multitree/forest.hpp"

namespace testutil {

using multitree::BigInt;
using multitree::Edge;
using multitree::Weight;
using multitree::WeightedForest;

/// True iff some vertex permutation maps a onto b preserving weights.
/// Brute force over all permutations; keep n small.
bool brute_force_isomorphic(const WeightedForest& a, const WeightedForest& b);

/// Applies a vertex relabeling to a forest. `perm[v]` is the new label of v.
WeightedForest relabel(const WeightedForest& f, const std::vector<int>& perm);

/// Labeled tree on n >= 2 vertices from a Prüfer sequence (length n-2,
/// entries in 0..n-1), unit weights.
WeightedForest prufer_decode(const std::vector<int>& seq, int n);

/// All n^(n-2) labeled unit-weight trees on n vertices (n >= 1).
std::vector<WeightedForest> all_labeled_trees(int n);

/// Coefficients c[d] of det(xI - A) = sum_d c[d] x^d by exact permutation
/// expansion; n <= 9 or so.
std::vector<BigInt> charpoly_det(const WeightedForest& f);

/// Uniform random forest: random edge count, edges joining random distinct
/// components, weights in [1, max_weight].
WeightedForest random_forest(std::mt19937& rng, int n, Weight max_weight);

/// Random spanning tree (Prüfer-uniform) with random weights in
/// [1, max_weight]; n >= 2.
WeightedForest random_tree(std::mt19937& rng, int n, Weight max_weight);

}  // namespace testutil
