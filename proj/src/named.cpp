#include "multitree/named.hpp"

#include <string>

namespace multitree {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

// Star K_{1,n-1} with center 0 and the given leaf-edge weights.
WeightedForest star(int n, const std::vector<Weight>& ws) {
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({0, i, ws[i - 1]});
  return WeightedForest(n, std::move(edges));
}

// Path 0-1-...-(n-1) with the given consecutive edge weights.
WeightedForest path(int n, const std::vector<Weight>& ws) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, ws[i]});
  return WeightedForest(n, std::move(edges));
}

}  // namespace

NamedGraph NamedGraph::balanced_star(int n, Weight m) {
  return {Kind::BalancedStar, n, m};
}
NamedGraph NamedGraph::extremal_star(int n, Weight m) {
  return {Kind::ExtremalStar, n, m};
}
NamedGraph NamedGraph::pstar(int n, Weight m) { return {Kind::PStar, n, m}; }
NamedGraph NamedGraph::unit_star_forest(int n, Weight m) {
  return {Kind::UnitStarForest, n, m};
}
NamedGraph NamedGraph::min_forest(int n, int k) {
  return {Kind::MinForest, n, 0, k};
}
NamedGraph NamedGraph::max_match_forest(int n, int k) {
  return {Kind::MaxMatchForest, n, 0, k};
}
NamedGraph NamedGraph::max_path_forest(int n, int k) {
  return {Kind::MaxPathForest, n, 0, k};
}
NamedGraph NamedGraph::weighted_p4(Weight a, Weight b, Weight c) {
  NamedGraph g{Kind::WeightedP4, 4, a + b + c};
  g.wa = a;
  g.wb = b;
  g.wc = c;
  return g;
}

std::string NamedGraph::describe() const {
  auto nm = [&] { return "(" + std::to_string(n) + "," + std::to_string(m) + ")"; };
  auto nk = [&] { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; };
  switch (kind) {
    case Kind::BalancedStar: return "BalancedStar" + nm();
    case Kind::ExtremalStar: return "ExtremalStar" + nm();
    case Kind::PStar: return "PStar" + nm();
    case Kind::UnitStarForest: return "UnitStarForest" + nm();
    case Kind::MinForest: return "MinForest" + nk();
    case Kind::MaxMatchForest: return "MaxMatchForest" + nk();
    case Kind::MaxPathForest: return "MaxPathForest" + nk();
    case Kind::WeightedP4:
      return "WeightedP4(" + std::to_string(wa) + "," + std::to_string(wb) +
             "," + std::to_string(wc) + ")";
  }
  return "?";
}

WeightedForest make_named(const NamedGraph& spec) {
  const int n = spec.n;
  const Weight m = spec.m;
  const int k = spec.k;
  switch (spec.kind) {
    case NamedGraph::Kind::BalancedStar: {
      require(n >= 2 && m >= n - 1, "BalancedStar needs n >= 2, m >= n-1");
      const Weight r = m / (n - 1);
      const Weight t = m - r * (n - 1);
      std::vector<Weight> ws;
      for (int i = 0; i < n - 1; ++i) ws.push_back(i < t ? r + 1 : r);
      return star(n, ws);
    }
    case NamedGraph::Kind::ExtremalStar: {
      require(n >= 2 && m >= n - 1, "ExtremalStar needs n >= 2, m >= n-1");
      std::vector<Weight> ws(n - 1, 1);
      ws[0] = m - n + 2;
      return star(n, ws);
    }
    case NamedGraph::Kind::PStar: {
      require(n >= 2 && m >= n, "PStar needs n >= 2, m >= n");
      std::vector<Weight> ws(n - 1, 1);
      ws[0] = m - n + 2;  // heavy weight on a pendant edge
      return path(n, ws);
    }
    case NamedGraph::Kind::UnitStarForest: {
      require(n >= 1 && m >= 0 && m <= n - 2,
              "UnitStarForest needs 0 <= m <= n-2");
      std::vector<Edge> edges;
      for (Weight i = 1; i <= m; ++i)
        edges.push_back({0, static_cast<int>(i), 1});
      return WeightedForest(n, std::move(edges));
    }
    case NamedGraph::Kind::MinForest: {
      require(1 <= k && k <= n, "MinForest needs 1 <= k <= n");
      std::vector<Edge> edges;
      for (int i = 1; i <= n - k; ++i) edges.push_back({0, i, 1});
      return WeightedForest(n, std::move(edges));
    }
    case NamedGraph::Kind::MaxMatchForest: {
      require(1 <= k && k <= n && 2 * k >= n,
              "MaxMatchForest needs 1 <= k <= n and 2k >= n");
      std::vector<Edge> edges;
      for (int i = 0; i < n - k; ++i) edges.push_back({2 * i, 2 * i + 1, 1});
      return WeightedForest(n, std::move(edges));
    }
    case NamedGraph::Kind::MaxPathForest: {
      require(k >= 1 && 2 * k < n, "MaxPathForest needs 1 <= k and 2k < n");
      std::vector<Edge> edges;
      for (int i = 0; i < k - 1; ++i) edges.push_back({2 * i, 2 * i + 1, 1});
      for (int v = 2 * (k - 1); v + 1 < n; ++v) edges.push_back({v, v + 1, 1});
      return WeightedForest(n, std::move(edges));
    }
    case NamedGraph::Kind::WeightedP4:
      require(spec.wa >= 1 && spec.wb >= 1 && spec.wc >= 1,
              "WeightedP4 needs positive weights");
      return path(4, {spec.wa, spec.wb, spec.wc});
  }
  throw ParameterError("unknown named-graph kind");
}

}  // namespace multitree
