#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "multitree/forest.hpp"

namespace multitree {

using BigInt = boost::multiprecision::cpp_int;

/// Exact coefficients (b_0, ..., b_{floor(n/2)}) of the characteristic
/// polynomial of a weighted forest on n vertices:
///
///   phi(F, x) = sum_k (-1)^k b_k x^{n-2k}
///
/// where b_k is the sum over k-edge matchings of the products of the squared
/// edge weights. Always b_0 = 1 and every b_k >= 0.
struct CoeffVector {
  int n = 0;               // order of the underlying forest
  std::vector<BigInt> b;   // length floor(n/2)+1, index k holds b_k

  /// Largest k with b_k != 0, i.e. the maximum matching size.
  int matching_number() const;

  friend bool operator==(const CoeffVector&, const CoeffVector&) = default;
};

enum class PendantOrder { LowestIndex, HighestIndex };

/// Exact coefficient vector by pendant elimination:
///   b_k(G) = b_k(G - v) + w(uv)^2 b_{k-1}(G - v - u)
/// for a pendant vertex v with neighbor u. Pendants are consumed
/// lowest-index first; the result does not depend on that choice.
CoeffVector coeffs(const WeightedForest& f);

/// Same computation with an explicit elimination order, exposed so tests can
/// confirm order independence.
CoeffVector coeffs_with_order(const WeightedForest& f, PendantOrder order);

/// Independent route: explicit enumeration of all k-matchings. Throws
/// SizeBoundError when n exceeds `max_order` (the enumeration is
/// exponential in principle and meant for cross-checking).
CoeffVector coeffs_oracle(const WeightedForest& f, int max_order = 16);

/// b_1 = sum of squared edge weights.
BigInt b1(const WeightedForest& f);

}  // namespace multitree
