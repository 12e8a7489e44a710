#pragma once

#include <string>

#include "multitree/forest.hpp"

namespace multitree {

/// Descriptor of one of the named extremal graphs.
///
///   BalancedStar(n,m)    star K_{1,n-1}, weights as equal as possible
///   ExtremalStar(n,m)    star K_{1,n-1}, weights (m-n+2, 1, ..., 1)
///   PStar(n,m)           path P_n, weights (m-n+2, 1, ..., 1) with the
///                        heavy weight on a pendant edge
///   UnitStarForest(n,m)  (K_{1,m}, K_1, ..., K_1), unit weights, m <= n-2
///   MinForest(n,k)       (K_{1,n-k}, K_1, ..., K_1), unit weights
///   MaxMatchForest(n,k)  (P_2, ..., P_2, K_1, ..., K_1): n-k copies of P_2,
///                        2k-n isolated vertices (needs 2k >= n)
///   MaxPathForest(n,k)   (P_2, ..., P_2, P_{n-2k+2}): k-1 copies of P_2
///                        (needs 2k < n)
///   WeightedP4(a,b,c)    path P_4 with weights (a, b, c), b on the middle
///                        edge
struct NamedGraph {
  enum class Kind {
    BalancedStar,
    ExtremalStar,
    PStar,
    UnitStarForest,
    MinForest,
    MaxMatchForest,
    MaxPathForest,
    WeightedP4,
  };

  Kind kind;
  int n = 0;
  Weight m = 0;
  int k = 0;
  Weight wa = 0, wb = 0, wc = 0;  // WeightedP4 only

  static NamedGraph balanced_star(int n, Weight m);
  static NamedGraph extremal_star(int n, Weight m);
  static NamedGraph pstar(int n, Weight m);
  static NamedGraph unit_star_forest(int n, Weight m);
  static NamedGraph min_forest(int n, int k);
  static NamedGraph max_match_forest(int n, int k);
  static NamedGraph max_path_forest(int n, int k);
  static NamedGraph weighted_p4(Weight a, Weight b, Weight c);

  std::string describe() const;
};

/// Builds the named graph. Throws ParameterError when the descriptor's
/// parameter constraints fail.
WeightedForest make_named(const NamedGraph& spec);

}  // namespace multitree
