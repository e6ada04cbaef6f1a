#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "onebound/core.hpp"

namespace onebound::kraft {

/// Per-level codeword counts N_j and blocked-parent counts M_j for a
/// length multiset. M_{L+1} = 0 and M_j = ceil((N_j + M_{j+1}) / 2):
/// M_j nodes at level j-1 are ancestors of codewords of length >= j.
struct LengthSpectrum {
  int max_len = 0;                       // L
  std::int64_t total = 0;                // n
  std::vector<std::int64_t> level_count; // index 1..L, [0] unused
  std::vector<std::int64_t> blocked;     // index 2..L+1, [0..1] unused

  std::int64_t count(int level) const { return level_count.at(level); }
  std::int64_t blocked_at(int level) const { return blocked.at(level); }
};

LengthSpectrum spectrum(const std::vector<int>& lengths);

/// Number of nodes at the given level of the maximal full binary tree in
/// which every root-to-leaf path has at most `budget` right edges:
/// sum_{i=0}^{budget-1} C(level, i) + C(level-1, budget-1).
/// Saturates instead of overflowing.
std::int64_t level_capacity(int level, int budget);

enum class Verdict { feasible, infeasible, indeterminate };

std::string_view to_string(Verdict v) noexcept;

struct LevelReport {
  int level = 0;              // j
  std::int64_t count = 0;     // N_j
  std::int64_t capacity = 0;  // level_capacity(j, D)
  std::int64_t blocked = 0;   // M_{j+1}
  std::int64_t bound = 0;     // capacity - blocked
  std::int64_t slack = 0;     // bound - count
  bool ok = false;
};

/// The inequalities are sufficient for existence; they are also necessary
/// when the multiset fills a full tree (kraft sum exactly 1). A failing
/// check on a non-full multiset is therefore only indeterminate.
struct Feasibility {
  Verdict verdict = Verdict::indeterminate;
  std::vector<LevelReport> levels;  // level L down to 1
  KraftSum kraft;
};

Feasibility check_feasibility(const std::vector<int>& lengths, int budget);

/// Builds a prefix code with the given length multiset in which every
/// codeword has at most `budget` ones. Levels are processed deepest first;
/// each level takes the leftmost still-available nodes of the complete
/// budget-limited tree (all binary strings with at most `budget` ones),
/// where "leftmost" is the smallest string under 0 < 1. Within one length
/// class, symbols keep their input order. Throws NotFeasible unless
/// check_feasibility reports feasible.
CodeBook build_from_lengths(const std::vector<int>& lengths, int budget,
                            const std::vector<std::string>& labels = {});

}  // namespace onebound::kraft
