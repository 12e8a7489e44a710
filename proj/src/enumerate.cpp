#include "multitree/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace multitree {

ClassSpec ClassSpec::multitree(int n, Weight m) {
  if (n < 1) throw ParameterError("T(n,m) needs n >= 1");
  if (m < n - 1) throw ParameterError("T(n,m) needs m >= n-1");
  if (n == 1 && m != 0) throw ParameterError("T(1,m) needs m = 0");
  return {Kind::MultiTree, n, m};
}

ClassSpec ClassSpec::multiforest(int n, Weight m) {
  if (n < 1) throw ParameterError("F(n,m) needs n >= 1");
  if (m < 0) throw ParameterError("F(n,m) needs m >= 0");
  if (n == 1 && m != 0) throw ParameterError("F(1,m) is empty for m > 0");
  return {Kind::MultiForest, n, m};
}

ClassSpec ClassSpec::fixed_seq_tree(int n, Weight m) {
  if (n < 2) throw ParameterError("T(n,m;a,1,...,1) needs n >= 2");
  if (m < n)
    throw ParameterError("T(n,m;a,1,...,1) needs m >= n so that a >= 2");
  return {Kind::FixedSeqTree, n, m};
}

ClassSpec ClassSpec::unit_forest(int n, int k) {
  if (n < 1 || k < 1 || k > n)
    throw ParameterError("F_n^k needs 1 <= k <= n");
  return {Kind::UnitForest, n, static_cast<Weight>(n - k), k};
}

std::string ClassSpec::describe() const {
  switch (kind) {
    case Kind::MultiTree:
      return "T(" + std::to_string(n) + "," + std::to_string(m) + ")";
    case Kind::MultiForest:
      return "F(" + std::to_string(n) + "," + std::to_string(m) + ")";
    case Kind::FixedSeqTree:
      return "T(" + std::to_string(n) + "," + std::to_string(m) + ";" +
             std::to_string(a()) + ",1,...,1)";
    case Kind::UnitForest:
      return "F_" + std::to_string(n) + "^" + std::to_string(k);
  }
  return "?";
}

namespace {

void compositions_rec(Weight total, int parts, std::vector<Weight>& acc,
                      const std::function<void(const std::vector<Weight>&)>& emit) {
  if (parts == 0) {
    if (total == 0) emit(acc);
    return;
  }
  if (parts == 1) {
    acc.push_back(total);
    emit(acc);
    acc.pop_back();
    return;
  }
  for (Weight x = 1; x <= total - (parts - 1); ++x) {
    acc.push_back(x);
    compositions_rec(total - x, parts - 1, acc, emit);
    acc.pop_back();
  }
}

}  // namespace

void compositions(Weight total, int parts,
                  const std::function<void(const std::vector<Weight>&)>& emit) {
  if (parts < 1 || total < parts)
    throw InfeasibleError("no compositions of " + std::to_string(total) +
                          " into " + std::to_string(parts) +
                          " positive parts");
  std::vector<Weight> acc;
  acc.reserve(parts);
  compositions_rec(total, parts, acc, emit);
}

std::vector<std::vector<Weight>> compositions_list(Weight total, int parts) {
  std::vector<std::vector<Weight>> out;
  compositions(total, parts, [&](const std::vector<Weight>& c) {
    out.push_back(c);
  });
  return out;
}

BigInt composition_count(Weight total, int parts) {
  // C(total-1, parts-1)
  if (parts < 1 || total < parts) return 0;
  BigInt num = 1;
  for (int i = 0; i < parts - 1; ++i) {
    num *= BigInt(total - 1 - i);
    num /= (i + 1);  // exact: product of j consecutive integers / j!
  }
  return num;
}

namespace {

// Parent array of the rooted tree with the given 1-based level sequence:
// parent of position i is the nearest j < i with level[j] == level[i] - 1.
WeightedForest tree_from_levels(const std::vector<int>& levels) {
  const int n = static_cast<int>(levels.size());
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) {
    int p = i - 1;
    while (levels[p] != levels[i] - 1) --p;
    edges.push_back({p, i, 1});
  }
  return WeightedForest(n, std::move(edges));
}

// All rooted trees on n vertices as canonical level sequences, generated in
// decreasing lexicographic order (Beyer-Hedetniemi successor rule).
template <class Fn>
void rooted_level_sequences(int n, Fn&& visit) {
  std::vector<int> level(n);
  std::iota(level.begin(), level.end(), 1);  // the path
  for (;;) {
    visit(level);
    int p = -1;
    for (int i = n - 1; i >= 0; --i)
      if (level[i] > 2) {
        p = i;
        break;
      }
    if (p < 0) return;  // the star was reached
    int q = p - 1;
    while (level[q] != level[p] - 1) --q;
    for (int i = p; i < n; ++i) level[i] = level[i - (p - q)];
  }
}

}  // namespace

std::vector<WeightedForest> unlabeled_trees(int n, int max_order) {
  if (n < 1) throw ParameterError("trees need n >= 1");
  if (n > max_order)
    throw SizeBoundError("tree generation limited to n <= " +
                         std::to_string(max_order));
  std::map<CanonicalCode, WeightedForest> seen;
  rooted_level_sequences(n, [&](const std::vector<int>& levels) {
    WeightedForest t = tree_from_levels(levels);
    CanonicalCode code = canonical_code(t);
    seen.emplace(std::move(code), std::move(t));
  });
  std::vector<WeightedForest> out;
  out.reserve(seen.size());
  for (auto& [code, tree] : seen) out.push_back(std::move(tree));
  return out;
}

namespace {

// Disjoint union with components relabeled consecutively.
WeightedForest disjoint_union(const std::vector<const WeightedForest*>& parts) {
  int n = 0;
  std::vector<Edge> edges;
  for (const WeightedForest* part : parts) {
    for (const auto& e : part->edges())
      edges.push_back({e.u + n, e.v + n, e.w});
    n += part->order();
  }
  return WeightedForest(n, std::move(edges));
}

// Multisets of unlabeled trees with total order n (and exactly
// `component_count` parts when >= 0). Sizes are chosen non-increasing and,
// within a size, tree indices non-decreasing, so each multiset appears once.
void forest_skeletons_rec(int remaining, int max_size, int min_tree_index,
                          int parts_left,
                          const std::vector<std::vector<WeightedForest>>& trees,
                          std::vector<const WeightedForest*>& acc,
                          const std::function<void(const std::vector<const WeightedForest*>&)>& emit) {
  if (remaining == 0) {
    if (parts_left <= 0) emit(acc);
    return;
  }
  if (parts_left == 0) return;
  for (int s = std::min(remaining, max_size); s >= 1; --s) {
    // a lower bound check: parts_left-1 more parts of size <= s must cover
    // remaining - s vertices
    const auto& pool = trees[s];
    int start = (s == max_size) ? min_tree_index : 0;
    for (int i = start; i < static_cast<int>(pool.size()); ++i) {
      acc.push_back(&pool[i]);
      forest_skeletons_rec(remaining - s, s, i,
                           parts_left < 0 ? parts_left : parts_left - 1,
                           trees, acc, emit);
      acc.pop_back();
    }
  }
}

// component_count < 0 means any number of components.
void forest_skeletons(int n, int component_count,
                      const std::function<void(const WeightedForest&)>& emit) {
  std::vector<std::vector<WeightedForest>> trees(n + 1);
  for (int s = 1; s <= n; ++s) trees[s] = unlabeled_trees(s);
  std::vector<const WeightedForest*> acc;
  forest_skeletons_rec(
      n, n, 0, component_count < 0 ? -1 : component_count, trees, acc,
      [&](const std::vector<const WeightedForest*>& parts) {
        emit(disjoint_union(parts));
      });
}

void check_budget(const BigInt& estimate, std::uint64_t budget,
                  const ClassSpec& spec) {
  if (estimate > budget) {
    std::uint64_t clamped =
        estimate > BigInt(UINT64_MAX)
            ? UINT64_MAX
            : estimate.convert_to<std::uint64_t>();
    throw BudgetExceededError(spec.describe() + " needs " +
                                  estimate.str() +
                                  " candidates, over the budget of " +
                                  std::to_string(budget),
                              clamped);
  }
}

// Assigns each weight tuple to the skeleton's edges in stored order.
void weighted_variants(const WeightedForest& skeleton, Weight m,
                       const std::function<void(WeightedForest)>& emit) {
  const int e = static_cast<int>(skeleton.edges().size());
  if (e == 0) {
    if (m == 0) emit(skeleton);
    return;
  }
  if (m < e) return;
  compositions(m, e, [&](const std::vector<Weight>& ws) {
    std::vector<Edge> edges = skeleton.edges();
    for (int i = 0; i < e; ++i) edges[i].w = ws[i];
    emit(WeightedForest(skeleton.order(), std::move(edges)));
  });
}

}  // namespace

BigInt candidate_estimate(const ClassSpec& spec) {
  switch (spec.kind) {
    case ClassSpec::Kind::MultiTree: {
      if (spec.n == 1) return 1;
      BigInt count = static_cast<int>(unlabeled_trees(spec.n).size());
      return count * composition_count(spec.m, spec.n - 1);
    }
    case ClassSpec::Kind::FixedSeqTree: {
      BigInt count = static_cast<int>(unlabeled_trees(spec.n).size());
      return count * (spec.n - 1);
    }
    case ClassSpec::Kind::MultiForest: {
      BigInt total = 0;
      forest_skeletons(spec.n, -1, [&](const WeightedForest& skel) {
        const int e = static_cast<int>(skel.edges().size());
        if (e == 0)
          total += (spec.m == 0) ? 1 : 0;
        else
          total += composition_count(spec.m, e);
      });
      return total;
    }
    case ClassSpec::Kind::UnitForest: {
      BigInt total = 0;
      forest_skeletons(spec.n, spec.k,
                       [&](const WeightedForest&) { total += 1; });
      return total;
    }
  }
  return 0;
}

std::vector<ClassMember> enumerate_class(const ClassSpec& spec,
                                         std::uint64_t budget) {
  check_budget(candidate_estimate(spec), budget, spec);

  std::map<CanonicalCode, WeightedForest> seen;
  auto keep = [&](WeightedForest f) {
    CanonicalCode code = canonical_code(f);
    seen.emplace(std::move(code), std::move(f));
  };

  switch (spec.kind) {
    case ClassSpec::Kind::MultiTree: {
      if (spec.n == 1) {
        keep(WeightedForest::isolated(1));
        break;
      }
      for (const auto& skel : unlabeled_trees(spec.n))
        weighted_variants(skel, spec.m, keep);
      break;
    }
    case ClassSpec::Kind::FixedSeqTree: {
      const Weight heavy = spec.a();
      for (const auto& skel : unlabeled_trees(spec.n)) {
        for (std::size_t i = 0; i < skel.edges().size(); ++i) {
          std::vector<Edge> edges = skel.edges();
          for (auto& e : edges) e.w = 1;
          edges[i].w = heavy;
          keep(WeightedForest(spec.n, std::move(edges)));
        }
      }
      break;
    }
    case ClassSpec::Kind::MultiForest:
      forest_skeletons(spec.n, -1, [&](const WeightedForest& skel) {
        weighted_variants(skel, spec.m, keep);
      });
      break;
    case ClassSpec::Kind::UnitForest:
      forest_skeletons(spec.n, spec.k, keep);
      break;
  }

  std::vector<ClassMember> out;
  out.reserve(seen.size());
  for (auto& [code, forest] : seen)
    out.push_back({code, std::move(forest)});
  return out;
}

}  // namespace multitree
