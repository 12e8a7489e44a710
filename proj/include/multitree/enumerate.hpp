#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "multitree/canonical.hpp"
#include "multitree/charpoly.hpp"
#include "multitree/forest.hpp"

namespace multitree {

/// Description of one of the enumerable graph classes.
///
///   MultiTree    T(n,m): weighted trees of order n, total weight m
///   MultiForest  F(n,m): weighted forests of order n, total weight m
///   FixedSeqTree T(n,m; a,1,...,1): trees with weight sequence
///                (m-n+2, 1, ..., 1)
///   UnitForest   F_n^k: unit-weight forests of order n with exactly k
///                components (equivalently F(n, n-k) with all weights one)
struct ClassSpec {
  enum class Kind { MultiTree, MultiForest, FixedSeqTree, UnitForest };

  Kind kind = Kind::MultiTree;
  int n = 0;
  Weight m = 0;  // total weight (derived n-k for UnitForest)
  int k = 0;     // component count, UnitForest only

  static ClassSpec multitree(int n, Weight m);
  static ClassSpec multiforest(int n, Weight m);
  static ClassSpec fixed_seq_tree(int n, Weight m);
  static ClassSpec unit_forest(int n, int k);

  Weight r() const { return m / (n - 1); }       // floor(m / (n-1))
  Weight t() const { return m - r() * (n - 1); }
  Weight a() const { return m - n + 2; }

  std::string describe() const;

  friend bool operator==(const ClassSpec&, const ClassSpec&) = default;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// All positive-integer tuples with `parts` entries summing to `total`, in
/// lexicographic order; there are C(total-1, parts-1) of them. Throws
/// InfeasibleError when total < parts (or parts < 1).
void compositions(Weight total, int parts,
                  const std::function<void(const std::vector<Weight>&)>& emit);

std::vector<std::vector<Weight>> compositions_list(Weight total, int parts);

/// C(total-1, parts-1), exactly.
BigInt composition_count(Weight total, int parts);

/// One unit-weight representative per isomorphism class of trees on n
/// vertices, sorted by canonical code. Generated from rooted level
/// sequences, deduplicated as free trees. Throws SizeBoundError beyond
/// `max_order`.
std::vector<WeightedForest> unlabeled_trees(int n, int max_order = 12);

struct ClassMember {
  CanonicalCode code;
  WeightedForest forest;
};

/// Exact pre-dedup candidate count for a class (stars-and-bars over the
/// underlying skeletons).
BigInt candidate_estimate(const ClassSpec& spec);

/// Every member of the class exactly once up to weighted isomorphism,
/// sorted by canonical code. Throws BudgetExceededError when the pre-dedup
/// candidate estimate exceeds `budget`.
std::vector<ClassMember> enumerate_class(const ClassSpec& spec,
                                         std::uint64_t budget = kDefaultBudget);

}  // namespace multitree
