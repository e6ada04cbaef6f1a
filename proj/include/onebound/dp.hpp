#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "onebound/core.hpp"

namespace onebound::dp {

enum class Algo { naive, knuth_yao };

template <typename W>
constexpr W infeasible_cost() {
  if constexpr (std::is_floating_point_v<W>) {
    return std::numeric_limits<W>::infinity();
  } else {
    return std::numeric_limits<W>::max();
  }
}

/// Interval costs C(i,j,w) and split indices R(i,j,w) for 1 <= i <= j <= n,
/// 0 <= w <= budget. C(i,j,w) is the cheapest alphabetic tree over symbols
/// i..j whose paths carry at most w right edges; R(i,j,w) is the largest k
/// in (i,j] attaining the minimum. Entries with no feasible tree hold
/// infeasible_cost() and split 0.
template <typename W>
struct CostTableT {
  int n = 0;
  int budget = 0;
  std::vector<W> cost;
  std::vector<std::int32_t> split;
  std::vector<std::uint64_t> examined_per_layer;  // split candidates, by w

  std::size_t index(int i, int j, int w) const noexcept {
    return (static_cast<std::size_t>(w) * n + (i - 1)) * n + (j - 1);
  }
  W at(int i, int j, int w) const { return cost[index(i, j, w)]; }
  std::int32_t split_at(int i, int j, int w) const {
    return split[index(i, j, w)];
  }
  bool feasible() const {
    return n >= 1 && at(1, n, budget) != infeasible_cost<W>();
  }
  std::uint64_t examined_total() const {
    return std::accumulate(examined_per_layer.begin(),
                           examined_per_layer.end(), std::uint64_t{0});
  }
};

using CostTable = CostTableT<Cost>;
using RealCostTable = CostTableT<double>;

/// Fills the table by diagonals. The split loop runs over (i,j] for the
/// naive algorithm and over [R(i,j-1,w), R(i+1,j,w)] clamped to (i,j] for
/// knuth_yao; ties keep the largest k in both cases, so the two algorithms
/// produce identical tables.
template <typename W>
CostTableT<W> cost_table(std::span<const W> weights, int budget, Algo algo) {
  const int n = static_cast<int>(weights.size());
  if (n == 0) throw Error(Errc::empty_input, "no weights");
  if (budget < 0) throw Error(Errc::bad_format, "D must be >= 0");

  CostTableT<W> t;
  t.n = n;
  t.budget = budget;
  const W inf = infeasible_cost<W>();
  const std::size_t layer = static_cast<std::size_t>(n) * n;
  t.cost.assign(static_cast<std::size_t>(budget + 1) * layer, inf);
  t.split.assign(t.cost.size(), 0);
  t.examined_per_layer.assign(budget + 1, 0);

  std::vector<W> prefix(n + 1, W{});
  for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + weights[i];
  auto seg = [&](int i, int j) { return prefix[j] - prefix[i - 1]; };

  for (int w = 0; w <= budget; ++w)
    for (int i = 1; i <= n; ++i) {
      t.cost[t.index(i, i, w)] = W{};
      t.split[t.index(i, i, w)] = i;
    }
  for (int w = 1; w <= budget; ++w)
    for (int i = 1; i + 1 <= n; ++i) {
      t.cost[t.index(i, i + 1, w)] = seg(i, i + 1);
      t.split[t.index(i, i + 1, w)] = i + 1;
    }

  for (int w = 1; w <= budget; ++w) {
    std::uint64_t examined = 0;
    for (int s = 2; s <= n - 1; ++s) {
      for (int i = 1; i + s <= n; ++i) {
        const int j = i + s;
        int lo = i + 1;
        int hi = j;
        if (algo == Algo::knuth_yao) {
          lo = std::max(t.split_at(i, j - 1, w), i + 1);
          hi = std::min(t.split_at(i + 1, j, w), j);
        }
        W best = inf;
        int arg = 0;
        for (int k = lo; k <= hi; ++k) {
          ++examined;
          const W left = t.at(i, k - 1, w);
          const W right = t.at(k, j, w - 1);
          if (left == inf || right == inf) continue;
          const W cand = left + right;
          if (best == inf || cand <= best) {
            best = cand;
            arg = k;
          }
        }
        if (best != inf) {
          t.cost[t.index(i, j, w)] = seg(i, j) + best;
          t.split[t.index(i, j, w)] = arg;
        }
      }
    }
    t.examined_per_layer[w] = examined;
  }
  return t;
}

CostTable cost_table_naive(const Distribution& dist, int budget);
CostTable cost_table_ky(const Distribution& dist, int budget);

/// Split table with the interval costs discarded; the solver keeps only
/// two cost layers while filling it.
struct SplitTable {
  int n = 0;
  int budget = 0;
  std::vector<std::int32_t> split;
  Cost optimal = 0;
  bool feasible = false;

  std::size_t index(int i, int j, int w) const noexcept {
    return (static_cast<std::size_t>(w) * n + (i - 1)) * n + (j - 1);
  }
  std::int32_t split_at(int i, int j, int w) const {
    return split[index(i, j, w)];
  }
};

SplitTable cost_splits_lowmem(std::span<const Cost> weights, int budget,
                              Algo algo);

template <typename W>
CodeTree reconstruct_tree(const CostTableT<W>& table);
CodeTree reconstruct_tree(const SplitTable& table);

extern template CodeTree reconstruct_tree(const CostTableT<Cost>&);
extern template CodeTree reconstruct_tree(const CostTableT<double>&);

/// Knuth-Yao table, tree reconstruction, codebook. Throws Infeasible when
/// n >= 2 and budget == 0.
std::pair<CodeBook, Cost> optimal_alphabetic(const Distribution& dist,
                                             int budget,
                                             Algo algo = Algo::knuth_yao);

/// Float-weight variant used by the CLI when exact scaling is impossible.
std::pair<CodeBook, double> optimal_alphabetic_real(
    const std::vector<double>& weights, int budget,
    const std::vector<std::string>& labels = {});

}  // namespace onebound::dp
