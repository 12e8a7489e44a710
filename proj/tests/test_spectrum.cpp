#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "multitree/spectrum.hpp"
#include "testutil.hpp"

using namespace multitree;
using doctest::Approx;

TEST_CASE("adjacency matrix") {
  WeightedForest p2(2, {{0, 1, 3}});
  auto a = adjacency_matrix(p2);
  CHECK(a == std::vector<std::vector<std::int64_t>>{{0, 3}, {3, 0}});

  CHECK(adjacency_matrix(WeightedForest::isolated(1)) ==
        std::vector<std::vector<std::int64_t>>{{0}});

  WeightedForest star(4, {{0, 1, 2}, {0, 2, 1}, {0, 3, 1}});
  CHECK(adjacency_matrix(star)[0] == std::vector<std::int64_t>{0, 2, 1, 1});
}

TEST_CASE("single edges have energy 2w") {
  for (Weight w = 1; w <= 9; ++w) {
    WeightedForest p2(2, {{0, 1, w}});
    CHECK(energy_eigen(p2) == Approx(2.0 * w).epsilon(1e-12));
  }
}

TEST_CASE("eigen energies match the closed forms") {
  CHECK(energy_eigen(make_named(NamedGraph::balanced_star(5, 7))) ==
        Approx(2.0 * std::sqrt(13.0)).epsilon(1e-12));  // r=1, t=3

  // heavy-pendant P_4 (3,1,1): 2 sqrt((a+c)^2 + b^2) with a=3, b=1, c=1
  WeightedForest p4(4, {{0, 1, 3}, {1, 2, 1}, {2, 3, 1}});
  CHECK(energy_eigen(p4) == Approx(2.0 * std::sqrt(17.0)).epsilon(1e-12));

  // the full named sweep, every family with a closed form
  std::vector<NamedGraph> specs;
  for (int n = 2; n <= 8; ++n) {
    for (Weight m = n - 1; m <= 10; ++m) {
      specs.push_back(NamedGraph::balanced_star(n, m));
      specs.push_back(NamedGraph::extremal_star(n, m));
    }
    for (Weight m = 0; m <= n - 2; ++m)
      specs.push_back(NamedGraph::unit_star_forest(n, m));
    for (int k = 1; k <= n; ++k) {
      specs.push_back(NamedGraph::min_forest(n, k));
      if (2 * k >= n) specs.push_back(NamedGraph::max_match_forest(n, k));
    }
  }
  for (Weight a = 1; a <= 4; ++a)
    for (Weight b = 1; b <= 4; ++b)
      for (Weight c = 1; c <= 4; ++c)
        specs.push_back(NamedGraph::weighted_p4(a, b, c));
  for (const auto& spec : specs) {
    double closed = energy_closed(spec);
    double eigen = energy_eigen(make_named(spec));
    CHECK(std::abs(eigen - closed) <= 1e-9 * (1.0 + closed));
  }
}

TEST_CASE("energy_closed rejects families without a closed form") {
  CHECK(energy_closed(NamedGraph::extremal_star(5, 8)) ==
        Approx(2.0 * std::sqrt(28.0)));
  CHECK(energy_closed(NamedGraph::unit_star_forest(6, 4)) == Approx(4.0));
  CHECK(energy_closed(NamedGraph::max_match_forest(7, 5)) == Approx(4.0));
  CHECK_THROWS_AS(energy_closed(NamedGraph::pstar(6, 9)), ParameterError);
  CHECK_THROWS_AS(energy_closed(NamedGraph::max_path_forest(7, 3)),
                  ParameterError);
}

TEST_CASE("coulson integral on fixed coefficient vectors") {
  CoeffVector trivial{4, {1, 0, 0}};
  CHECK(energy_coulson(trivial) == Approx(0.0).epsilon(1e-12));

  CoeffVector single{2, {1, 16}};  // one edge of weight 4
  CHECK(std::abs(energy_coulson(single) - 8.0) <= 1e-4);

  CoeffVector unit_p4{4, {1, 3, 1}};
  CHECK(std::abs(energy_coulson(unit_p4) - 2.0 * std::sqrt(5.0)) <= 1e-4);
}

TEST_CASE("coulson and eigensolve agree on random forests") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 80; ++trial) {
    auto f = testutil::random_forest(rng, 1 + trial % 10, 6);
    double gap = std::abs(energy_eigen(f) - energy_coulson(coeffs(f)));
    CHECK(gap <= 1e-4);
  }
}

TEST_CASE("spectrum invariants: trace, pairing, nonnegativity") {
  std::mt19937 rng(8888);
  for (int trial = 0; trial < 80; ++trial) {
    auto f = testutil::random_forest(rng, 1 + trial % 12, 6);
    auto s = spectrum_of(f);
    REQUIRE(static_cast<int>(s.eigenvalues.size()) == f.order());
    double trace = 0.0;
    for (double lam : s.eigenvalues) trace += lam;
    CHECK(std::abs(trace) <= 1e-9 * (1.0 + f.total_weight()));
    // bipartite pairing: sorted spectrum is antisymmetric
    for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
      double mirrored = -s.eigenvalues[s.eigenvalues.size() - 1 - i];
      CHECK(std::abs(s.eigenvalues[i] - mirrored) <= 1e-9);
    }
    CHECK(s.energy >= 0.0);
    CHECK((s.energy == 0.0) == f.edges().empty());
  }
}

TEST_CASE("energy of a weighted P_4 does not depend on the pendant split") {
  // (a, b, c) with a + c fixed: the energy depends only on a+c and b
  for (Weight b = 1; b <= 4; ++b)
    for (Weight sum = 2; sum <= 9; ++sum) {
      double reference = -1.0;
      for (Weight a = 1; a < sum; ++a) {
        Weight c = sum - a;
        double e = energy_eigen(make_named(NamedGraph::weighted_p4(a, b, c)));
        if (reference < 0)
          reference = e;
        else
          CHECK(std::abs(e - reference) <= 1e-9);
      }
    }
}

TEST_CASE("coulson route rejects coefficients outside double range") {
  CoeffVector huge{4, {BigInt(1), boost::multiprecision::pow(BigInt(10), 400),
                       BigInt(0)}};
  CHECK_THROWS_AS(energy_coulson(huge), QuadratureError);
  CoeffVector bad_head{4, {BigInt(2), BigInt(1), BigInt(0)}};
  CHECK_THROWS_AS(energy_coulson(bad_head), ParameterError);
}

TEST_CASE("eigensolve handles n = 64 without convergence failure") {
  std::mt19937 rng(1);
  auto f = testutil::random_tree(rng, 64, 9);
  auto s = spectrum_of(f);
  CHECK(std::isfinite(s.energy));
  CHECK(s.energy > 0.0);
}
