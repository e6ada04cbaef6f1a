#include "onebound/kraft.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace onebound::kraft {

namespace {

// capacities saturate here; counts being compared never get close
constexpr std::int64_t kSaturated = std::numeric_limits<std::int64_t>::max() / 4;

std::int64_t sat_add(std::int64_t a, std::int64_t b) {
  return std::min(kSaturated, a + b);
}

std::int64_t sat_binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > static_cast<unsigned __int128>(kSaturated)) return kSaturated;
  }
  return static_cast<std::int64_t>(r);
}

}  // namespace

LengthSpectrum spectrum(const std::vector<int>& lengths) {
  if (lengths.empty()) throw Error(Errc::empty_lengths, "no lengths given");
  int max_len = 0;
  for (int l : lengths) {
    if (l < 1) throw Error(Errc::non_positive_length, "lengths must be >= 1");
    max_len = std::max(max_len, l);
  }
  LengthSpectrum s;
  s.max_len = max_len;
  s.total = static_cast<std::int64_t>(lengths.size());
  s.level_count.assign(max_len + 1, 0);
  for (int l : lengths) ++s.level_count[l];
  s.blocked.assign(max_len + 2, 0);
  for (int j = max_len; j >= 2; --j) {
    s.blocked[j] = (s.level_count[j] + s.blocked[j + 1] + 1) / 2;
  }
  return s;
}

std::int64_t level_capacity(int level, int budget) {
  if (level < 1) throw Error(Errc::bad_format, "level must be >= 1");
  if (budget < 1) throw Error(Errc::bad_format, "D must be >= 1");
  std::int64_t cap = 0;
  for (int i = 0; i < budget; ++i) cap = sat_add(cap, sat_binom(level, i));
  return sat_add(cap, sat_binom(level - 1, budget - 1));
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::feasible:
      return "FEASIBLE";
    case Verdict::infeasible:
      return "INFEASIBLE";
    default:
      return "INDETERMINATE";
  }
}

Feasibility check_feasibility(const std::vector<int>& lengths, int budget) {
  if (budget < 1) throw Error(Errc::bad_format, "D must be >= 1");
  const LengthSpectrum s = spectrum(lengths);

  Feasibility out;
  out.kraft = kraft_sum(lengths);
  bool all_ok = true;
  for (int j = s.max_len; j >= 1; --j) {
    LevelReport row;
    row.level = j;
    row.count = s.count(j);
    row.capacity = level_capacity(j, budget);
    row.blocked = s.blocked_at(j + 1);
    row.bound = row.capacity - row.blocked;
    row.slack = row.bound - row.count;
    row.ok = row.count <= row.bound;
    all_ok &= row.ok;
    out.levels.push_back(row);
  }
  if (all_ok) {
    out.verdict = Verdict::feasible;
  } else if (out.kraft.is_full) {
    out.verdict = Verdict::infeasible;  // necessity holds on full trees
  } else {
    out.verdict = Verdict::indeterminate;
  }
  return out;
}

namespace {

// Smallest string t > node of equal length with at most `budget` ones;
// false when node is the last one. A zero fill is always admissible, so
// flipping the rightmost eligible '0' is the successor.
bool advance_node(std::string& node, int budget) {
  int ones_before = ones_count(node);
  for (int p = static_cast<int>(node.size()) - 1; p >= 0; --p) {
    if (node[p] == '1') {
      --ones_before;  // now counts ones strictly before p
      continue;
    }
    if (ones_before + 1 <= budget) {
      node[p] = '1';
      std::fill(node.begin() + p + 1, node.end(), '0');
      return true;
    }
  }
  return false;
}

// plain binary +1; false when the string is all ones
bool increment_node(std::string& node) {
  for (int p = static_cast<int>(node.size()) - 1; p >= 0; --p) {
    if (node[p] == '0') {
      node[p] = '1';
      std::fill(node.begin() + p + 1, node.end(), '0');
      return true;
    }
    node[p] = '0';
  }
  return false;
}

}  // namespace

CodeBook build_from_lengths(const std::vector<int>& lengths, int budget,
                            const std::vector<std::string>& labels) {
  const Feasibility report = check_feasibility(lengths, budget);
  if (report.verdict != Verdict::feasible) {
    throw Error(Errc::not_feasible,
                std::string("length multiset not constructible: verdict ") +
                    std::string(to_string(report.verdict)));
  }

  std::map<int, std::vector<std::size_t>> by_length;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    by_length[lengths[i]].push_back(i);  // input order within a class
  }

  // Longest codewords first, marching left to right through the complete
  // budget-limited tree: each word is the smallest admissible string
  // ordered after its predecessor, so the words read left to right with
  // nonincreasing lengths. A smaller boundary never rules out a layout a
  // larger one permits, so each minimal pick is safe and a dead end means
  // no such left-to-right layout exists at all.
  std::vector<std::string> words(lengths.size());
  std::string prev;
  for (auto cls = by_length.rbegin(); cls != by_length.rend(); ++cls) {
    const int length = cls->first;
    for (std::size_t symbol : cls->second) {
      std::string node;
      if (prev.empty()) {
        node.assign(length, '0');
      } else {
        // smallest length-bit string ordered after prev and not its prefix
        node = prev.substr(0, length);
        if (!increment_node(node)) {
          throw Error(Errc::not_feasible,
                      "no left-to-right layout: the tree is exhausted at "
                      "length " +
                          std::to_string(length));
        }
      }
      if (ones_count(node) > budget && !advance_node(node, budget)) {
        throw Error(Errc::not_feasible,
                    "no left-to-right layout: the tree is exhausted at "
                    "length " +
                        std::to_string(length));
      }
      words[symbol] = node;
      prev = std::move(node);
    }
  }
  return make_codebook(CodeMode::prefix, budget, std::move(words), labels);
}

}  // namespace onebound::kraft
