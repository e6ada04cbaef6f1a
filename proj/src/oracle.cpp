#include "onebound/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <utility>

namespace onebound::oracle {

const std::vector<TreeShape>& tree_shapes(int leaves) {
  if (leaves < 1 || leaves > kMaxAlphabeticLeaves) {
    throw Error(Errc::too_large,
                "tree enumeration capped at " +
                    std::to_string(kMaxAlphabeticLeaves) + " leaves");
  }
  static const std::vector<std::vector<TreeShape>> cache = [] {
    std::vector<std::vector<TreeShape>> c(kMaxAlphabeticLeaves + 1);
    c[1] = {TreeShape{LeafStat{0, 0}}};
    for (int m = 2; m <= kMaxAlphabeticLeaves; ++m) {
      for (int left = 1; left < m; ++left) {
        for (const auto& ls : c[left]) {
          for (const auto& rs : c[m - left]) {
            TreeShape shape;
            shape.reserve(m);
            for (LeafStat st : ls) {
              shape.push_back(
                  {static_cast<std::int8_t>(st.depth + 1), st.right_edges});
            }
            for (LeafStat st : rs) {
              shape.push_back({static_cast<std::int8_t>(st.depth + 1),
                               static_cast<std::int8_t>(st.right_edges + 1)});
            }
            c[m].push_back(std::move(shape));
          }
        }
      }
    }
    return c;
  }();
  return cache[leaves];
}

std::optional<Cost> brute_alphabetic(const Distribution& dist, int budget) {
  const int n = static_cast<int>(dist.size());
  if (n > kMaxAlphabeticLeaves) {
    throw Error(Errc::too_large, "brute_alphabetic capped at " +
                                     std::to_string(kMaxAlphabeticLeaves));
  }
  if (n == 1) return Cost{0};

  std::optional<Cost> best;
  for (const TreeShape& shape : tree_shapes(n)) {
    bool within = true;
    for (LeafStat st : shape) {
      if (st.right_edges > budget) {
        within = false;
        break;
      }
    }
    if (!within) continue;
    Cost cost = 0;
    for (int i = 0; i < n; ++i) {
      cost += dist.weights[i] * static_cast<Cost>(shape[i].depth);
    }
    if (!best || cost < *best) best = cost;
  }
  return best;
}

std::optional<Cost> brute_prefix(const Distribution& dist, int budget) {
  const int n = static_cast<int>(dist.size());
  if (n > kMaxPrefixLeaves) {
    throw Error(Errc::too_large,
                "brute_prefix capped at " + std::to_string(kMaxPrefixLeaves));
  }
  if (n == 1) return Cost{0};

  std::vector<Weight> ascending = dist.weights;
  std::sort(ascending.begin(), ascending.end());

  std::optional<Cost> best;
  std::vector<int> depths(n);
  for (const TreeShape& shape : tree_shapes(n)) {
    bool within = true;
    for (LeafStat st : shape) {
      if (st.right_edges > budget) {
        within = false;
        break;
      }
    }
    if (!within) continue;
    for (int i = 0; i < n; ++i) depths[i] = shape[i].depth;
    // longest codewords on the lightest symbols is optimal per shape
    std::sort(depths.begin(), depths.end(), std::greater<>());
    Cost cost = 0;
    for (int i = 0; i < n; ++i) {
      cost += ascending[i] * static_cast<Cost>(depths[i]);
    }
    if (!best || cost < *best) best = cost;
  }
  return best;
}

bool brute_feasible(const std::vector<int>& lengths, int budget) {
  if (lengths.empty()) throw Error(Errc::empty_lengths, "no lengths given");
  if (budget < 1) throw Error(Errc::bad_format, "D must be >= 1");
  int max_len = 0;
  for (int l : lengths) {
    if (l < 1) throw Error(Errc::non_positive_length, "lengths must be >= 1");
    max_len = std::max(max_len, l);
  }
  if (static_cast<int>(lengths.size()) > kMaxFeasibleSymbols ||
      max_len > kMaxFeasibleLength) {
    throw Error(Errc::too_large,
                "brute_feasible capped at n <= " +
                    std::to_string(kMaxFeasibleSymbols) + ", L <= " +
                    std::to_string(kMaxFeasibleLength));
  }

  std::vector<std::int64_t> need(max_len + 1, 0);
  for (int l : lengths) ++need[l];

  // State: available node counts at the current level, bucketed by ones
  // count; equal-ones nodes at one level root isomorphic subtrees, so the
  // bucket counts capture everything the search needs.
  std::map<std::pair<int, std::vector<std::int64_t>>, bool> memo;

  std::function<bool(int, const std::vector<std::int64_t>&)> feasible_from =
      [&](int level, const std::vector<std::int64_t>& avail) -> bool {
    if (level > max_len) return true;
    const std::int64_t codewords = need[level];
    const std::int64_t supply =
        std::accumulate(avail.begin(), avail.end(), std::int64_t{0});
    if (codewords > supply) return false;

    auto key = std::make_pair(level, avail);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    std::vector<std::int64_t> take(budget + 1, 0);
    // backtrack over per-bucket codeword counts, trying the ones-richest
    // buckets first: their subtrees are the poorest, so spending them on
    // leaves is the most promising branch
    std::function<bool(int, std::int64_t)> choose =
        [&](int bucket, std::int64_t remaining) -> bool {
      if (bucket < 0) {
        if (remaining != 0) return false;
        std::vector<std::int64_t> next(budget + 1, 0);
        for (int o = 0; o <= budget; ++o) {
          const std::int64_t kept = avail[o] - take[o];
          next[o] += kept;
          if (o + 1 <= budget) next[o + 1] += kept;
        }
        return feasible_from(level + 1, next);
      }
      std::int64_t below = 0;
      for (int o = 0; o < bucket; ++o) below += avail[o];
      const std::int64_t hi = std::min(avail[bucket], remaining);
      const std::int64_t lo = std::max<std::int64_t>(0, remaining - below);
      for (std::int64_t c = hi; c >= lo; --c) {
        take[bucket] = c;
        if (choose(bucket - 1, remaining - c)) {
          take[bucket] = 0;
          return true;
        }
      }
      take[bucket] = 0;
      return false;
    };

    const bool found = choose(budget, codewords);
    memo.emplace(std::move(key), found);
    return found;
  };

  std::vector<std::int64_t> root_children(budget + 1, 0);
  root_children[0] = 1;  // the 0-child of the root
  root_children[1] += 1; // the 1-child
  return feasible_from(1, root_children);
}

Cost huffman_cost(const Distribution& dist) {
  if (dist.size() == 0) throw Error(Errc::empty_input, "no weights");
  if (dist.size() == 1) return 0;
  std::priority_queue<Cost, std::vector<Cost>, std::greater<>> heap(
      dist.weights.begin(), dist.weights.end());
  Cost total = 0;
  while (heap.size() > 1) {
    Cost a = heap.top();
    heap.pop();
    Cost b = heap.top();
    heap.pop();
    total += a + b;
    heap.push(a + b);
  }
  return total;
}

}  // namespace onebound::oracle
