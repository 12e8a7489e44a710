#pragma once

#include <cstdint>
#include <vector>

#include "multitree/charpoly.hpp"
#include "multitree/forest.hpp"
#include "multitree/named.hpp"

namespace multitree {

/// Eigenvalues (sorted ascending) and energy = sum of their absolute values.
/// Forests are bipartite, so the spectrum is symmetric about 0 and the trace
/// vanishes; both hold to eigensolver accuracy (~1e-10 * (1+m) for n <= 16).
struct Spectrum {
  std::vector<double> eigenvalues;
  double energy = 0.0;
};

/// Weighted adjacency matrix: A[u][v] = A[v][u] = w per edge, zero diagonal.
std::vector<std::vector<std::int64_t>> adjacency_matrix(const WeightedForest& f);

/// Full spectrum via a backward-stable symmetric eigensolve. Throws
/// ConvergenceError if the solver fails (must not happen for n <= 64).
Spectrum spectrum_of(const WeightedForest& f);

/// Energy by eigenvalues.
double energy_eigen(const WeightedForest& f);

/// Energy by the Coulson integral
///   E = (2/pi) * int_0^inf x^-2 ln(sum_k b_k x^{2k}) dx
/// evaluated by adaptive Gauss-Kronrod quadrature after splitting at x = 1
/// and mapping [1,inf) to (0,1] via x -> 1/x. Agrees with energy_eigen
/// within 1e-4 absolute. Throws QuadratureError if the refinement budget is
/// exhausted.
double energy_coulson(const CoeffVector& c);

/// Closed-form energy for the named families that have one:
/// BalancedStar, ExtremalStar, UnitStarForest, MinForest, MaxMatchForest,
/// WeightedP4. Throws ParameterError for the others.
double energy_closed(const NamedGraph& spec);

}  // namespace multitree
