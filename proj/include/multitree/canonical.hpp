#pragma once

#include <compare>
#include <string>

#include "multitree/forest.hpp"

namespace multitree {

/// Deterministic byte string identifying a weighted forest up to
/// weight-preserving isomorphism: equal codes iff isomorphic.
struct CanonicalCode {
  std::string value;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode& a, const CanonicalCode& b) {
    return a.value <=> b.value;
  }
};

/// Rooted-tree canonical encoding per component, each child subtree code
/// paired with the connecting edge weight, rooted at the component's center
/// (bicentral trees take the lexicographically smaller of the two rootings),
/// component codes sorted.
CanonicalCode canonical_code(const WeightedForest& f);

}  // namespace multitree
