#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "onebound/core.hpp"

namespace onebound::oracle {

inline constexpr int kMaxAlphabeticLeaves = 12;
inline constexpr int kMaxPrefixLeaves = 8;
inline constexpr int kMaxFeasibleSymbols = 10;
inline constexpr int kMaxFeasibleLength = 8;

/// Depth and right-edge count of one leaf of a full binary tree shape,
/// leaves listed left to right.
struct LeafStat {
  std::int8_t depth = 0;
  std::int8_t right_edges = 0;
};
using TreeShape = std::vector<LeafStat>;

/// All full binary tree shapes on `leaves` ordered leaves (Catalan
/// enumeration), memoized. leaves <= kMaxAlphabeticLeaves.
const std::vector<TreeShape>& tree_shapes(int leaves);

/// Exhaustive minimum of sum(weight_i * depth_i) over alphabetic trees
/// whose paths carry at most `budget` right edges; nullopt when none
/// survive the budget.
std::optional<Cost> brute_alphabetic(const Distribution& dist, int budget);

/// Exhaustive budgeted prefix optimum: per surviving shape the descending
/// depth list is paired with ascending weights, which is optimal for that
/// shape by the usual exchange argument.
std::optional<Cost> brute_prefix(const Distribution& dist, int budget);

/// True iff some prefix-free assignment over the complete budget-limited
/// tree realizes the length multiset. Backtracking over per-level ones
/// classes (nodes at one level with equal ones count are exchangeable).
bool brute_feasible(const std::vector<int>& lengths, int budget);

/// Classic greedy-merge optimum of an unconstrained prefix code.
Cost huffman_cost(const Distribution& dist);

}  // namespace onebound::oracle
