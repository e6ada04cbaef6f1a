#include "onebound/dp.hpp"

#include <functional>

namespace onebound::dp {

CostTable cost_table_naive(const Distribution& dist, int budget) {
  return cost_table<Cost>(dist.weights, budget, Algo::naive);
}

CostTable cost_table_ky(const Distribution& dist, int budget) {
  return cost_table<Cost>(dist.weights, budget, Algo::knuth_yao);
}

SplitTable cost_splits_lowmem(std::span<const Cost> weights, int budget,
                              Algo algo) {
  const int n = static_cast<int>(weights.size());
  if (n == 0) throw Error(Errc::empty_input, "no weights");
  if (budget < 0) throw Error(Errc::bad_format, "D must be >= 0");

  SplitTable t;
  t.n = n;
  t.budget = budget;
  const std::size_t layer = static_cast<std::size_t>(n) * n;
  t.split.assign(static_cast<std::size_t>(budget + 1) * layer, 0);

  const Cost inf = infeasible_cost<Cost>();
  std::vector<Cost> prefix(n + 1, 0);
  for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + weights[i];
  auto seg = [&](int i, int j) { return prefix[j] - prefix[i - 1]; };

  // rolling cost layers: prev = w-1, cur = w
  std::vector<Cost> prev(layer, inf);
  std::vector<Cost> cur(layer, inf);
  auto cell = [n](int i, int j) {
    return static_cast<std::size_t>(i - 1) * n + (j - 1);
  };

  for (int i = 1; i <= n; ++i) {
    prev[cell(i, i)] = 0;
    for (int w = 0; w <= budget; ++w) t.split[t.index(i, i, w)] = i;
  }
  Cost top = prev[cell(1, n)];  // only valid once w reaches budget

  for (int w = 1; w <= budget; ++w) {
    std::fill(cur.begin(), cur.end(), inf);
    for (int i = 1; i <= n; ++i) cur[cell(i, i)] = 0;
    for (int i = 1; i + 1 <= n; ++i) {
      cur[cell(i, i + 1)] = seg(i, i + 1);
      t.split[t.index(i, i + 1, w)] = i + 1;
    }
    for (int s = 2; s <= n - 1; ++s) {
      for (int i = 1; i + s <= n; ++i) {
        const int j = i + s;
        int lo = i + 1;
        int hi = j;
        if (algo == Algo::knuth_yao) {
          lo = std::max(t.split_at(i, j - 1, w), i + 1);
          hi = std::min(t.split_at(i + 1, j, w), j);
        }
        Cost best = inf;
        int arg = 0;
        for (int k = lo; k <= hi; ++k) {
          const Cost left = cur[cell(i, k - 1)];
          const Cost right = prev[cell(k, j)];
          if (left == inf || right == inf) continue;
          const Cost cand = left + right;
          if (best == inf || cand <= best) {
            best = cand;
            arg = k;
          }
        }
        if (best != inf) {
          cur[cell(i, j)] = seg(i, j) + best;
          t.split[t.index(i, j, w)] = arg;
        }
      }
    }
    std::swap(prev, cur);
    top = prev[cell(1, n)];
  }

  t.feasible = top != inf;
  t.optimal = t.feasible ? top : 0;
  return t;
}

namespace {

// shared recursive build over any split accessor
CodeTree build_tree(int n, int budget,
                    const std::function<int(int, int, int)>& split_at) {
  CodeTree tree;
  std::function<int(int, int, int)> build = [&](int i, int j, int w) -> int {
    const int at = static_cast<int>(tree.nodes.size());
    tree.nodes.emplace_back();
    if (i == j) {
      tree.nodes[at].symbol = i - 1;
      return at;
    }
    const int k = split_at(i, j, w);
    const int left = build(i, k - 1, w);
    const int right = build(k, j, w - 1);
    tree.nodes[at].left = left;
    tree.nodes[at].right = right;
    return at;
  };
  build(1, n, budget);
  return tree;
}

}  // namespace

template <typename W>
CodeTree reconstruct_tree(const CostTableT<W>& table) {
  if (!table.feasible()) {
    throw Error(Errc::infeasible, "infeasible: D=0 with n>1");
  }
  return build_tree(table.n, table.budget, [&](int i, int j, int w) {
    return table.split_at(i, j, w);
  });
}

template CodeTree reconstruct_tree(const CostTableT<Cost>&);
template CodeTree reconstruct_tree(const CostTableT<double>&);

CodeTree reconstruct_tree(const SplitTable& table) {
  if (!table.feasible) {
    throw Error(Errc::infeasible, "infeasible: D=0 with n>1");
  }
  return build_tree(table.n, table.budget, [&](int i, int j, int w) {
    return table.split_at(i, j, w);
  });
}

std::pair<CodeBook, Cost> optimal_alphabetic(const Distribution& dist,
                                             int budget, Algo algo) {
  auto table = cost_table<Cost>(dist.weights, budget, algo);
  CodeTree tree = reconstruct_tree(table);
  CodeBook book = make_codebook(CodeMode::alphabetic, budget,
                                tree.codewords(), dist.labels);
  return {std::move(book), table.at(1, table.n, budget)};
}

std::pair<CodeBook, double> optimal_alphabetic_real(
    const std::vector<double>& weights, int budget,
    const std::vector<std::string>& labels) {
  auto table = cost_table<double>(weights, budget, Algo::knuth_yao);
  CodeTree tree = reconstruct_tree(table);
  CodeBook book =
      make_codebook(CodeMode::alphabetic, budget, tree.codewords(), labels);
  return {std::move(book), table.at(1, table.n, budget)};
}

}  // namespace onebound::dp
