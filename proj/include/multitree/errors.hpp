#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace multitree {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// graph construction / mutation
struct CycleError : Error {
  using Error::Error;
};
struct DuplicateEdgeError : Error {
  using Error::Error;
};
struct NonPositiveWeightError : Error {
  using Error::Error;
};
struct VertexOutOfRange : Error {
  using Error::Error;
};
struct NotPendantError : Error {
  using Error::Error;
};

// named constructors, class specs, CLI parameters
struct ParameterError : Error {
  using Error::Error;
};

// size / resource guards
struct SizeBoundError : Error {
  using Error::Error;
};
struct BudgetExceededError : Error {
  BudgetExceededError(const std::string& what, std::uint64_t estimate)
      : Error(what), estimate(estimate) {}
  std::uint64_t estimate;  // pre-dedup candidate count
};
struct InfeasibleError : Error {
  using Error::Error;
};

// comparison / verification
struct OrderMismatchError : Error {
  using Error::Error;
};
struct UnknownTheoremError : Error {
  using Error::Error;
};
struct MonotonicityViolation : Error {
  using Error::Error;
};
// A float-indistinguishable tie between quasi-order-incomparable members.
// Never resolved silently; the caller must inspect the class by hand.
struct TieResolutionError : Error {
  using Error::Error;
};

// numerics
struct QuadratureError : Error {
  using Error::Error;
};
struct ConvergenceError : Error {
  using Error::Error;
};

}  // namespace multitree
