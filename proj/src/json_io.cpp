#include "multitree/json_io.hpp"

#include <cstdio>
#include <sstream>

namespace multitree {

Json forest_to_json(const WeightedForest& f) {
  Json j;
  j["n"] = f.order();
  Json edges = Json::array();
  for (const auto& e : f.edges()) edges.push_back({e.u, e.v, e.w});
  j["edges"] = std::move(edges);
  return j;
}

WeightedForest forest_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw ParameterError("graph JSON must be {\"n\": int, \"edges\": [[u,v,w], ...]}");
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3)
      throw ParameterError("each edge must be a [u, v, w] triple");
    edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<Weight>()});
  }
  return WeightedForest(j.at("n").get<int>(), std::move(edges));
}

Json coeffs_to_json(const CoeffVector& c) {
  Json j;
  j["n"] = c.n;
  Json b = Json::array();
  for (const auto& x : c.b) b.push_back(x.str());
  j["b"] = std::move(b);
  return j;
}

Json spectrum_to_json(const Spectrum& s) {
  Json j;
  j["energy"] = s.energy;
  j["eigenvalues"] = s.eigenvalues;
  return j;
}

Json relation_to_json(const OrderRelation& rel, const CoeffVector& c1,
                      const CoeffVector& c2) {
  Json j;
  j["relation"] = to_string(rel.tag);
  if (auto w = rel.witness())
    j["witness"] = *w;
  else
    j["witness"] = nullptr;
  if (rel.tag == OrderRelation::Tag::Incomparable) {
    j["witness_less"] = *rel.less_at;
    j["witness_greater"] = *rel.greater_at;
  }
  auto decimal = [](const CoeffVector& c) {
    Json arr = Json::array();
    for (const auto& x : c.b) arr.push_back(x.str());
    return arr;
  };
  j["b1"] = decimal(c1);
  j["b2"] = decimal(c2);
  return j;
}

namespace {

Json class_to_json(const ClassSpec& spec) {
  Json j;
  switch (spec.kind) {
    case ClassSpec::Kind::MultiTree: j["kind"] = "T"; break;
    case ClassSpec::Kind::MultiForest: j["kind"] = "F"; break;
    case ClassSpec::Kind::FixedSeqTree: j["kind"] = "Tfixed"; break;
    case ClassSpec::Kind::UnitForest: j["kind"] = "Fnk"; break;
  }
  j["n"] = spec.n;
  j["m"] = spec.m;
  if (spec.kind == ClassSpec::Kind::UnitForest) j["k"] = spec.k;
  j["description"] = spec.describe();
  return j;
}

}  // namespace

Json report_to_json(const ExtremalReport& r) {
  Json j;
  j["class"] = class_to_json(r.spec);
  j["direction"] = to_string(r.direction);
  j["value"] = r.value;
  Json argset = Json::array();
  for (const auto& code : r.argset) argset.push_back(code.value);
  j["argset"] = std::move(argset);
  Json graphs = Json::array();
  for (const auto& g : r.arg_graphs) graphs.push_back(forest_to_json(g));
  j["arg_graphs"] = std::move(graphs);
  j["unique"] = r.unique;
  j["class_size"] = r.class_size;
  Json cert = Json::array();
  for (const auto& entry : r.certificate) {
    Json e;
    e["code"] = entry.code.value;
    e["relation_to_winner"] = to_string(entry.relation);
    e["energy"] = entry.energy;
    e["gap"] = entry.gap;
    cert.push_back(std::move(e));
  }
  j["certificate"] = std::move(cert);
  return j;
}

Json verification_to_json(const VerificationResult& r) {
  Json j;
  j["theorem"] = r.theorem_id;
  Json params;
  params["n"] = r.params.n;
  params["m"] = r.params.m;
  params["k"] = r.params.k;
  j["params"] = std::move(params);
  j["pass"] = r.pass;
  Json expected;
  Json codes = Json::array();
  for (const auto& c : r.expected_codes) codes.push_back(c.value);
  expected["codes"] = std::move(codes);
  if (r.expected_value)
    expected["value"] = *r.expected_value;
  else
    expected["value"] = nullptr;
  j["expected"] = std::move(expected);
  if (r.observed)
    j["observed"] = report_to_json(*r.observed);
  else
    j["observed"] = nullptr;
  j["discrepancy"] = r.pass ? Json(nullptr) : Json(r.discrepancy);
  j["summary"] = r.summary;
  return j;
}

Json evidence_to_json(const ConjectureEvidence& e) {
  Json j;
  j["n"] = e.n;
  j["m"] = e.m;
  j["search"] = report_to_json(e.report);
  j["pstar_code"] = e.pstar_code.value;
  j["pstar_energy"] = e.pstar_energy;
  j["winner_energy_eigen"] = e.report.value;
  j["winner_energy_coulson"] = e.coulson_value;
  j["eigen_coulson_gap"] = e.eigen_coulson_gap;
  j["energy_cross_ok"] = e.energy_cross_ok;
  j["supports_conjecture"] = e.supports_conjecture;
  return j;
}

std::string class_csv(const ClassSpec& spec, std::uint64_t budget) {
  auto members = enumerate_class(spec, budget);
  std::ostringstream out;
  const int kmax = spec.n / 2;
  out << "canonical_code,n,m,energy";
  for (int k = 0; k <= kmax; ++k) out << ",b" << k;
  out << "\n";
  for (const auto& member : members) {
    CoeffVector cv = coeffs(member.forest);
    out << member.code.value << "," << member.forest.order() << ","
        << member.forest.total_weight() << ",";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", energy_eigen(member.forest));
    out << buf;
    for (const auto& b : cv.b) out << "," << b.str();
    out << "\n";
  }
  return out.str();
}

}  // namespace multitree
