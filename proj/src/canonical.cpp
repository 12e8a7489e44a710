#include "multitree/canonical.hpp"

#include <algorithm>
#include <functional>

namespace multitree {

namespace {

using Adjacency = std::vector<std::vector<std::pair<int, Weight>>>;

// Center(s) of one tree component: repeatedly strip current leaves until
// one or two vertices remain.
std::vector<int> tree_centers(const Adjacency& adj,
                              const std::vector<int>& verts) {
  if (verts.size() <= 2) return verts;
  std::vector<int> deg(adj.size(), 0);
  std::vector<char> alive(adj.size(), 0);
  for (int v : verts) {
    alive[v] = 1;
    deg[v] = static_cast<int>(adj[v].size());
  }
  std::vector<int> layer;
  for (int v : verts)
    if (deg[v] <= 1) layer.push_back(v);
  std::size_t remaining = verts.size();
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      alive[v] = 0;
      --remaining;
      for (auto [u, w] : adj[v]) {
        (void)w;
        if (alive[u] && --deg[u] == 1) next.push_back(u);
      }
    }
    layer = std::move(next);
  }
  std::vector<int> centers;
  for (int v : verts)
    if (alive[v]) centers.push_back(v);
  return centers;
}

// AHU code of the subtree rooted at v, entered via `parent`. Each child
// contributes "<weight>:<code>"; entries are sorted as strings so the code
// is invariant under child reordering.
std::string rooted_code(const Adjacency& adj, int v, int parent) {
  std::vector<std::string> entries;
  for (auto [u, w] : adj[v]) {
    if (u == parent) continue;
    entries.push_back(std::to_string(w) + ":" + rooted_code(adj, u, v));
  }
  std::sort(entries.begin(), entries.end());
  std::string code = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) code += ",";
    code += entries[i];
  }
  code += ")";
  return code;
}

}  // namespace

CanonicalCode canonical_code(const WeightedForest& f) {
  const Adjacency adj = f.adjacency();
  std::vector<std::string> component_codes;
  for (const auto& verts : f.components()) {
    const std::vector<int> centers = tree_centers(adj, verts);
    std::string best = rooted_code(adj, centers[0], -1);
    if (centers.size() == 2) {
      std::string alt = rooted_code(adj, centers[1], -1);
      if (alt < best) best = std::move(alt);
    }
    component_codes.push_back(std::move(best));
  }
  std::sort(component_codes.begin(), component_codes.end());
  std::string joined;
  for (std::size_t i = 0; i < component_codes.size(); ++i) {
    if (i) joined += "|";
    joined += component_codes[i];
  }
  return CanonicalCode{std::move(joined)};
}

}  // namespace multitree
