#pragma once

#include <optional>
#include <string>
#include <vector>

#include "multitree/enumerate.hpp"
#include "multitree/named.hpp"
#include "multitree/quasiorder.hpp"

namespace multitree {

enum class Direction { Min, Max };

std::string to_string(Direction d);

/// One line of the per-member comparison trail: how a non-extremal member
/// relates to the (first) winner.
struct CertificateEntry {
  CanonicalCode code;
  OrderRelation::Tag relation;  // member vs winner
  double energy = 0.0;
  double gap = 0.0;  // energy - extremal value
};

/// Result of an exhaustive extremal scan over a class.
struct ExtremalReport {
  ClassSpec spec;
  Direction direction = Direction::Min;
  double value = 0.0;
  std::vector<CanonicalCode> argset;       // all attaining members, sorted
  std::vector<WeightedForest> arg_graphs;  // parallel to argset
  bool unique = false;
  std::size_t class_size = 0;
  std::vector<CertificateEntry> certificate;  // non-winning members
};

/// Exhaustive exact scan. Near-ties (within 1e-9) are resolved through the
/// quasi-order: members with equal coefficient vectors tie exactly; a
/// strictly dominated member is excluded; float-indistinguishable but
/// incomparable members raise TieResolutionError rather than being decided
/// by noise.
ExtremalReport search(const ClassSpec& spec, Direction direction,
                      std::uint64_t budget = kDefaultBudget);

struct TheoremParams {
  int n = 0;
  Weight m = 0;
  int k = 0;
};

struct VerificationResult {
  std::string theorem_id;
  TheoremParams params;
  bool pass = false;
  std::vector<CanonicalCode> expected_codes;
  std::optional<double> expected_value;
  std::optional<ExtremalReport> observed;
  std::string discrepancy;  // empty when pass
  std::string summary;
};

/// Runs the named verification (see theorem_ids() for the registry) at the
/// given parameters. Throws UnknownTheoremError for an unregistered id and
/// ParameterError when the parameters fall outside the statement's range or
/// the configured exhaustive-check domain.
VerificationResult verify(const std::string& theorem_id,
                          const TheoremParams& params,
                          std::uint64_t budget = kDefaultBudget);

std::vector<std::string> theorem_ids();

/// Structured evidence from one max-energy scan of T(n,m) against the
/// heavy-pendant path. Reports the outcome; never asserts the conjecture.
struct ConjectureEvidence {
  int n = 0;
  Weight m = 0;
  ExtremalReport report;  // max search over T(n,m)
  CanonicalCode pstar_code;
  double pstar_energy = 0.0;
  double coulson_value = 0.0;  // winner energy via the integral route
  double eigen_coulson_gap = 0.0;
  bool energy_cross_ok = false;    // the two routes agree within 1e-4
  bool supports_conjecture = false;  // argset == {P*} and unique
};

ConjectureEvidence conjecture_evidence(int n, Weight m,
                                       std::uint64_t budget = kDefaultBudget);

}  // namespace multitree
