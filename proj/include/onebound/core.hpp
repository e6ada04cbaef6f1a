#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace onebound {

using Weight = std::int64_t;
using Cost = std::int64_t;

enum class Errc {
  empty_input,
  negative_weight,
  all_zero,
  label_count_mismatch,
  symbol_mismatch,
  unknown_symbol,
  dangling_suffix,
  no_match,
  infeasible,
  not_feasible,
  too_large,
  empty_lengths,
  non_positive_length,
  bad_format,
  verification_failed,
};

/// Library error carrying a machine-checkable reason code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Ordered list of nonnegative integer symbol weights. The order is
/// significant: the alphabetic solver reads it as the symbol order.
struct Distribution {
  std::vector<Weight> weights;
  std::vector<std::string> labels;  // empty, or one label per weight

  std::size_t size() const noexcept { return weights.size(); }
  Weight total() const noexcept;
  std::string label(std::size_t i) const;  // stored label, or "s<i+1>"
};

/// Checks weights (and labels, when given) and builds a Distribution.
/// Rejects empty input, negative weights, all-zero weights and label
/// count mismatches.
Distribution validate_distribution(std::vector<Weight> weights,
                                   std::vector<std::string> labels = {});

/// Number of '1' characters in a codeword.
int ones_count(std::string_view bits) noexcept;

enum class CodeMode { alphabetic, prefix };

std::string_view to_string(CodeMode mode) noexcept;

struct CodeEntry {
  std::string symbol;  // display label
  std::string word;    // ASCII '0'/'1'
};

/// Symbol -> codeword mapping; entry i belongs to symbol index i.
struct CodeBook {
  CodeMode mode = CodeMode::prefix;
  int ones_budget = 0;  // D
  std::vector<CodeEntry> entries;

  std::size_t size() const noexcept { return entries.size(); }
  std::vector<int> lengths() const;
  int max_ones() const;
  bool is_prefix_free() const;
  /// True when codewords in symbol order are strictly increasing in the
  /// alphabetical order on binary strings.
  bool is_alphabetic() const;
};

CodeBook make_codebook(CodeMode mode, int ones_budget,
                       std::vector<std::string> words,
                       const std::vector<std::string>& labels = {});

struct CostSummary {
  Cost raw = 0;
  double normalized = 0.0;
};

/// raw = sum(weight_i * length_i); normalized = raw / sum(weights).
CostSummary average_cost(const CodeBook& book, const Distribution& dist);

/// Exact value of sum(2^-l) over a length multiset, kept as a dyadic
/// rational. num/den hold the reduced fraction while it fits 64 bits;
/// the is_full / at_most_one flags are exact at any scale.
struct KraftSum {
  bool is_full = false;     // sum == 1
  bool at_most_one = true;  // sum <= 1
  bool exact = true;        // num/den are the reduced fraction
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  double value = 0.0;
};

KraftSum kraft_sum(const std::vector<int>& lengths);

/// Concatenates the codewords of the message symbols.
std::string encode(const CodeBook& book,
                   const std::vector<std::size_t>& message);

/// Unique parse of bits into symbol indices. Reports the 1-based offset
/// of the offending position on DanglingSuffix / NoMatch.
std::vector<std::size_t> decode(const CodeBook& book, std::string_view bits);

/// Rooted binary tree; the edge to a left child is labeled 0, to a right
/// child 1. Leaves carry symbol indices.
struct CodeTree {
  struct Node {
    int left = -1;
    int right = -1;
    int symbol = -1;  // >= 0 on leaves
  };
  std::vector<Node> nodes;  // nodes[0] is the root when nonempty

  bool empty() const noexcept { return nodes.empty(); }
  std::size_t leaf_count() const;
  bool is_full() const;
  int max_right_edges() const;
  /// Codewords indexed by symbol (root-to-leaf edge labels).
  std::vector<std::string> codewords() const;
};

}  // namespace onebound
