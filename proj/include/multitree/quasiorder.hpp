#pragma once

#include <optional>
#include <string>

#include "multitree/charpoly.hpp"
#include "multitree/forest.hpp"

namespace multitree {

/// Coefficientwise comparison of two coefficient vectors of equal order:
/// strictly-less when every b_k(G1) <= b_k(G2) with at least one strict,
/// equivalent when all equal, incomparable when strict inequalities go both
/// ways. Witness indices record where (in)comparability is exhibited.
struct OrderRelation {
  enum class Tag { StrictlyLess, Equivalent, StrictlyGreater, Incomparable };

  Tag tag = Tag::Equivalent;
  std::optional<int> less_at;     // first k with b_k(G1) < b_k(G2)
  std::optional<int> greater_at;  // first k with b_k(G1) > b_k(G2)

  /// The index exhibiting strictness (or, for incomparable, the first
  /// index where the vectors differ). Empty for equivalent vectors.
  std::optional<int> witness() const;

  bool strictly_less() const { return tag == Tag::StrictlyLess; }
  bool equivalent() const { return tag == Tag::Equivalent; }
};

std::string to_string(OrderRelation::Tag tag);

/// Exact-integer comparison. Throws OrderMismatchError when the underlying
/// orders differ (the relation is only defined between graphs of equal
/// order).
OrderRelation compare(const CoeffVector& c1, const CoeffVector& c2);

/// Outcome of checking the energy-monotonicity consequence of the
/// quasi-order on a concrete pair of forests.
struct MonotoneCheck {
  OrderRelation relation;
  double energy1 = 0.0;
  double energy2 = 0.0;
  bool pass = false;
  std::string detail;
};

/// Verifies that the quasi-order relation between G1 and G2 is consistent
/// with their energies: strict domination must give a strict energy
/// inequality (margin 1e-12), equivalent vectors must give equal energies
/// (within 1e-9). Incomparable pairs make no prediction and pass.
MonotoneCheck assert_monotone(const WeightedForest& g1,
                              const WeightedForest& g2);

}  // namespace multitree
