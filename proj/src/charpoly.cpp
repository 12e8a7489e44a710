#include "multitree/charpoly.hpp"

#include <algorithm>
#include <string>

namespace multitree {

namespace {

// Polynomials in the matching-size variable; index = number of edges used.
using Poly = std::vector<BigInt>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

}  // namespace

int CoeffVector::matching_number() const {
  for (int k = static_cast<int>(b.size()) - 1; k >= 0; --k)
    if (b[k] != 0) return k;
  return 0;
}

CoeffVector coeffs_with_order(const WeightedForest& f, PendantOrder order) {
  const int n = f.order();
  auto adj = f.adjacency();
  std::vector<int> deg(n);
  std::vector<char> alive(n, 1);
  for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(adj[v].size());

  // Each live vertex carries the matching generating polynomials of the
  // fragment already absorbed into it: open[v] counts matchings leaving v
  // uncovered, closed[v] those covering v.
  std::vector<Poly> open(n, Poly{1}), closed(n, Poly{0});

  int edges_left = static_cast<int>(f.edges().size());
  while (edges_left > 0) {
    int v = -1;
    if (order == PendantOrder::LowestIndex) {
      for (int x = 0; x < n && v < 0; ++x)
        if (alive[x] && deg[x] == 1) v = x;
    } else {
      for (int x = n - 1; x >= 0 && v < 0; --x)
        if (alive[x] && deg[x] == 1) v = x;
    }
    // a forest with an edge always has a pendant vertex
    int u = -1;
    Weight w = 0;
    for (auto [y, wy] : adj[v])
      if (alive[y]) {
        u = y;
        w = wy;
      }
    // matchings not using uv: v's fragment is free; matchings using uv:
    // both endpoints must be uncovered in their fragments.
    Poly free_v = poly_add(open[v], closed[v]);
    Poly new_open = poly_mul(open[u], free_v);
    Poly take = poly_mul(open[u], open[v]);
    for (auto& c : take) c *= BigInt(w) * w;
    take.insert(take.begin(), 0);  // one more matching edge
    closed[u] = poly_add(poly_mul(closed[u], free_v), take);
    open[u] = std::move(new_open);
    alive[v] = 0;
    --deg[u];
    --edges_left;
  }

  Poly total{1};
  for (int v = 0; v < n; ++v)
    if (alive[v]) total = poly_mul(total, poly_add(open[v], closed[v]));

  CoeffVector out;
  out.n = n;
  out.b.assign(static_cast<std::size_t>(n / 2) + 1, 0);
  for (std::size_t k = 0; k < total.size(); ++k) out.b[k] = total[k];
  return out;
}

CoeffVector coeffs(const WeightedForest& f) {
  return coeffs_with_order(f, PendantOrder::LowestIndex);
}

namespace {

void enumerate_matchings(const std::vector<Edge>& edges, std::size_t i,
                         std::vector<char>& used, int k, const BigInt& product,
                         std::vector<BigInt>& acc) {
  acc[k] += product;
  for (std::size_t j = i; j < edges.size(); ++j) {
    const Edge& e = edges[j];
    if (used[e.u] || used[e.v]) continue;
    used[e.u] = used[e.v] = 1;
    enumerate_matchings(edges, j + 1, used, k + 1,
                        product * BigInt(e.w) * e.w, acc);
    used[e.u] = used[e.v] = 0;
  }
}

}  // namespace

CoeffVector coeffs_oracle(const WeightedForest& f, int max_order) {
  if (f.order() > max_order)
    throw SizeBoundError("matching enumeration limited to n <= " +
                         std::to_string(max_order));
  std::vector<BigInt> acc(static_cast<std::size_t>(f.order() / 2) + 1, 0);
  std::vector<char> used(f.order(), 0);
  enumerate_matchings(f.edges(), 0, used, 0, 1, acc);
  CoeffVector out;
  out.n = f.order();
  out.b = std::move(acc);
  return out;
}

BigInt b1(const WeightedForest& f) {
  BigInt s = 0;
  for (const auto& e : f.edges()) s += BigInt(e.w) * e.w;
  return s;
}

}  // namespace multitree
