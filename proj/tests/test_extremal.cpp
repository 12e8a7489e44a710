#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "multitree/extremal.hpp"
#include "multitree/spectrum.hpp"

using namespace multitree;

TEST_CASE("min search over T(5,7) finds the balanced star uniquely") {
  auto report = search(ClassSpec::multitree(5, 7), Direction::Min);
  CHECK(report.unique);
  REQUIRE(report.argset.size() == 1);
  CHECK(report.argset[0] ==
        canonical_code(make_named(NamedGraph::balanced_star(5, 7))));
  CHECK(std::abs(report.value - 2.0 * std::sqrt(13.0)) <= 1e-9);
  CHECK(report.class_size == report.certificate.size() + 1);
  // every certificate entry sits strictly above the winner
  for (const auto& entry : report.certificate) {
    bool dominated = entry.relation == OrderRelation::Tag::StrictlyGreater;
    CHECK((dominated || entry.gap > 1e-9));
    CHECK(entry.gap > 0.0);
  }
}

TEST_CASE("max search over F(5,6): every K_1/K_2 forest ties at 2m") {
  auto report = search(ClassSpec::multiforest(5, 6), Direction::Max);
  CHECK(!report.unique);
  CHECK(std::abs(report.value - 12.0) <= 1e-9);
  // partitions of 6 into 1 or 2 edge weights: (6), (5,1), (4,2), (3,3)
  CHECK(report.argset.size() == 4);
  for (const auto& g : report.arg_graphs) {
    for (const auto& comp : g.components()) CHECK(comp.size() <= 2);
    CHECK(g.total_weight() == 6);
  }
}

TEST_CASE("min search over F_7^3") {
  auto report = search(ClassSpec::unit_forest(7, 3), Direction::Min);
  CHECK(report.unique);
  CHECK(report.argset[0] ==
        canonical_code(make_named(NamedGraph::min_forest(7, 3))));
  CHECK(std::abs(report.value - 4.0) <= 1e-9);  // 2 sqrt(n-k) = 2 sqrt(4)
}

TEST_CASE("verify: minimum-energy statements") {
  auto r22 = verify("thm2.2", {5, 7, 0});
  CHECK(r22.pass);
  auto r23 = verify("thm2.3", {5, 7, 0});
  CHECK(r23.pass);
  CHECK(r23.expected_value.has_value());
  CHECK(*r23.expected_value == doctest::Approx(2.0 * std::sqrt(13.0)));

  CHECK(verify("thm2.4", {6, 3, 0}).pass);  // sparse regime, unit star forest
  CHECK(verify("thm2.4", {6, 7, 0}).pass);  // dense regime, balanced star
  CHECK(verify("thm2.5", {5, 7, 0}).pass);
}

TEST_CASE("verify: maximum-energy statements") {
  auto r31 = verify("thm3.1", {5, 6, 0});
  CHECK(r31.pass);
  CHECK(r31.observed.has_value());
  CHECK(r31.observed->argset.size() == 4);

  auto r33 = verify("thm3.3", {5, 8, 0});
  CHECK(r33.pass);
  CHECK(*r33.expected_value == doctest::Approx(2.0 * std::sqrt(28.0)));

  CHECK(verify("thm3.6", {5, 7, 0}).pass);
  CHECK(verify("cor3.7", {5, 7, 0}).pass);
  CHECK(verify("thm3.6", {6, 9, 0}).pass);
}

TEST_CASE("verify: unit-forest statements") {
  CHECK(verify("thm4.3", {7, 0, 3}).pass);
  CHECK(verify("thm4.5", {7, 0, 5}).pass);
  CHECK(verify("thm4.6", {7, 0, 3}).pass);
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; k <= n; ++k) {
      CHECK(verify("thm4.3", {n, 0, k}).pass);
      if (2 * k >= n) CHECK(verify("thm4.5", {n, 0, k}).pass);
      if (2 * k < n) CHECK(verify("thm4.6", {n, 0, k}).pass);
    }
}

TEST_CASE("verify: the two lemmas and the path-split relation") {
  CHECK(verify("lem3.2", {5, 9, 0}).pass);
  CHECK(verify("lem3.2", {7, 12, 0}).pass);
  CHECK(verify("lem4.2", {0, 10, 4}).pass);
  CHECK(verify("lem4.2", {0, 0, 6}).pass);  // default sum cap 12
  CHECK(verify("lem4.4", {9, 0, 0}).pass);
  CHECK(verify("lem4.4", {10, 0, 0}).pass);
}

TEST_CASE("verify: registry and parameter validation") {
  CHECK_THROWS_AS(verify("thm9.9", {5, 7, 0}), UnknownTheoremError);
  CHECK_THROWS_AS(verify("thm2.3", {5, 2, 0}), ParameterError);
  CHECK_THROWS_AS(verify("thm4.5", {7, 0, 3}), ParameterError);  // 2k < n
  CHECK_THROWS_AS(verify("thm4.6", {7, 0, 4}), ParameterError);  // 2k >= n
  CHECK_THROWS_AS(verify("lem3.2", {8, 9, 0}), ParameterError);  // dim 7
  CHECK_THROWS_AS(verify("thm3.6", {6, 5, 0}), ParameterError);  // m < n
  CHECK(theorem_ids().size() == 14);
}

TEST_CASE("verification result carries a structured report") {
  auto res = verify("thm2.3", {4, 6, 0});
  CHECK(res.pass);
  REQUIRE(res.observed.has_value());
  CHECK(res.observed->class_size > 0);
  CHECK(res.observed->argset == res.expected_codes);
  CHECK(res.discrepancy.empty());
}

TEST_CASE("conjecture evidence records an exhaustive scan") {
  auto ev = conjecture_evidence(5, 6);
  CHECK(ev.n == 5);
  CHECK(ev.m == 6);
  CHECK(ev.report.class_size > 0);
  CHECK(ev.energy_cross_ok);
  CHECK(ev.eigen_coulson_gap <= 1e-4);
  // the evidence record never asserts; but the scan outcome is recorded
  if (ev.supports_conjecture) {
    CHECK(ev.report.argset.size() == 1);
    CHECK(ev.report.argset[0] == ev.pstar_code);
    CHECK(std::abs(ev.pstar_energy - ev.report.value) <= 1e-9);
  }

  // the boundary m = n is valid input
  auto boundary = conjecture_evidence(5, 5);
  CHECK(boundary.report.class_size > 0);

  CHECK_THROWS_AS(conjecture_evidence(4, 6), ParameterError);
  CHECK_THROWS_AS(conjecture_evidence(5, 4), ParameterError);
}

TEST_CASE("search propagates the budget refusal") {
  CHECK_THROWS_AS(search(ClassSpec::multitree(6, 9), Direction::Min, 10),
                  BudgetExceededError);
}

TEST_CASE("per-weight-sequence minimum inside T(5,7) is always the star") {
  std::map<std::vector<Weight>, std::vector<ClassMember>> groups;
  for (auto& member : enumerate_class(ClassSpec::multitree(5, 7)))
    groups[weight_sequence(member.forest).values()].push_back(
        std::move(member));
  for (auto& [sequence, members] : groups) {
    std::vector<Edge> edges;
    for (int i = 1; i <= 4; ++i) edges.push_back({0, i, sequence[i - 1]});
    WeightedForest star(5, std::move(edges));
    CanonicalCode star_code = canonical_code(star);
    auto star_cv = coeffs(star);
    double star_energy = energy_eigen(star);
    bool found = false;
    for (const auto& member : members) {
      if (member.code == star_code) {
        found = true;
        continue;
      }
      CHECK(compare(star_cv, coeffs(member.forest)).strictly_less());
      CHECK(star_energy < energy_eigen(member.forest) - 1e-12);
    }
    CHECK(found);
  }
}

TEST_CASE("forest minimum sweep for small orders") {
  for (int n = 4; n <= 5; ++n)
    for (Weight m = 0; m <= 7; ++m) CHECK(verify("thm2.4", {n, m, 0}).pass);
}

TEST_CASE("weighted P_4 maximum sits at b = 1 for every total weight") {
  for (Weight m = 3; m <= 9; ++m) {
    const double best =
        2.0 * std::sqrt(static_cast<double>((m - 1) * (m - 1) + 1));
    for (Weight a = 1; a <= m - 2; ++a)
      for (Weight b = 1; a + b + 1 <= m; ++b) {
        Weight c = m - a - b;
        double e = energy_eigen(make_named(NamedGraph::weighted_p4(a, b, c)));
        if (b == 1)
          CHECK(std::abs(e - best) <= 1e-9);
        else
          CHECK(e < best - 1e-9);
      }
  }
}
