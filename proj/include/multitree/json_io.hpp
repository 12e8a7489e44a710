#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "multitree/extremal.hpp"
#include "multitree/spectrum.hpp"

namespace multitree {

/// Insertion-ordered JSON so identical invocations serialize byte-identically.
using Json = nlohmann::ordered_json;

/// Graph interchange format: {"n": int, "edges": [[u, v, w], ...]}.
Json forest_to_json(const WeightedForest& f);
WeightedForest forest_from_json(const Json& j);

/// Coefficients as decimal strings ({"n": ..., "b": ["1", "3", ...]});
/// arbitrary-precision safe.
Json coeffs_to_json(const CoeffVector& c);

Json spectrum_to_json(const Spectrum& s);
Json relation_to_json(const OrderRelation& rel, const CoeffVector& c1,
                      const CoeffVector& c2);
Json report_to_json(const ExtremalReport& r);
Json verification_to_json(const VerificationResult& r);
Json evidence_to_json(const ConjectureEvidence& e);

/// CSV of a full class: canonical_code, n, m, energy, b0..bK (K = floor(n/2)).
std::string class_csv(const ClassSpec& spec, std::uint64_t budget);

}  // namespace multitree
