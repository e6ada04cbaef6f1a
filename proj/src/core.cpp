#include "onebound/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

namespace onebound {

Weight Distribution::total() const noexcept {
  return std::accumulate(weights.begin(), weights.end(), Weight{0});
}

std::string Distribution::label(std::size_t i) const {
  if (i < labels.size() && !labels[i].empty()) return labels[i];
  return "s" + std::to_string(i + 1);
}

Distribution validate_distribution(std::vector<Weight> weights,
                                   std::vector<std::string> labels) {
  if (weights.empty()) throw Error(Errc::empty_input, "no weights given");
  if (!labels.empty() && labels.size() != weights.size()) {
    throw Error(Errc::label_count_mismatch,
                "got " + std::to_string(labels.size()) + " labels for " +
                    std::to_string(weights.size()) + " weights");
  }
  bool any_positive = false;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 0) {
      throw Error(Errc::negative_weight,
                  "weight " + std::to_string(i + 1) + " is negative");
    }
    any_positive |= weights[i] > 0;
  }
  if (!any_positive) throw Error(Errc::all_zero, "all weights are zero");
  return Distribution{std::move(weights), std::move(labels)};
}

int ones_count(std::string_view bits) noexcept {
  return static_cast<int>(std::count(bits.begin(), bits.end(), '1'));
}

std::string_view to_string(CodeMode mode) noexcept {
  return mode == CodeMode::alphabetic ? "alphabetic" : "prefix";
}

std::vector<int> CodeBook::lengths() const {
  std::vector<int> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(static_cast<int>(e.word.size()));
  return out;
}

int CodeBook::max_ones() const {
  int m = 0;
  for (const auto& e : entries) m = std::max(m, ones_count(e.word));
  return m;
}

bool CodeBook::is_prefix_free() const {
  std::vector<std::string_view> words;
  words.reserve(entries.size());
  for (const auto& e : entries) words.emplace_back(e.word);
  std::sort(words.begin(), words.end());
  // in sorted order any prefix pair shows up adjacently
  for (std::size_t i = 0; i + 1 < words.size(); ++i) {
    if (words[i + 1].substr(0, words[i].size()) == words[i]) return false;
  }
  return true;
}

bool CodeBook::is_alphabetic() const {
  for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
    const std::string& a = entries[i].word;
    const std::string& b = entries[i + 1].word;
    if (!(a < b) || b.substr(0, a.size()) == a) return false;
  }
  return true;
}

CodeBook make_codebook(CodeMode mode, int ones_budget,
                       std::vector<std::string> words,
                       const std::vector<std::string>& labels) {
  CodeBook book;
  book.mode = mode;
  book.ones_budget = ones_budget;
  book.entries.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::string label = i < labels.size() && !labels[i].empty()
                            ? labels[i]
                            : "s" + std::to_string(i + 1);
    book.entries.push_back({std::move(label), std::move(words[i])});
  }
  return book;
}

CostSummary average_cost(const CodeBook& book, const Distribution& dist) {
  if (book.size() != dist.size()) {
    throw Error(Errc::symbol_mismatch,
                "codebook has " + std::to_string(book.size()) +
                    " entries for " + std::to_string(dist.size()) +
                    " symbols");
  }
  const Weight total = dist.total();
  if (total == 0) throw Error(Errc::all_zero, "all weights are zero");
  CostSummary out;
  for (std::size_t i = 0; i < book.size(); ++i) {
    out.raw += dist.weights[i] * static_cast<Cost>(book.entries[i].word.size());
  }
  out.normalized = static_cast<double>(out.raw) / static_cast<double>(total);
  return out;
}

KraftSum kraft_sum(const std::vector<int>& lengths) {
  KraftSum out;
  if (lengths.empty()) return out;  // empty sum, 0/1

  int max_len = 0;
  for (int l : lengths) {
    if (l < 1) throw Error(Errc::non_positive_length, "lengths must be >= 1");
    max_len = std::max(max_len, l);
  }
  // binary addition of the 2^-l terms: carry counts toward the root
  std::vector<std::uint64_t> bit(max_len + 1, 0);
  for (int l : lengths) ++bit[l];
  for (int l = max_len; l >= 1; --l) {
    bit[l - 1] += bit[l] / 2;
    bit[l] %= 2;
  }

  int tail = 0;  // deepest set fractional bit
  for (int l = max_len; l >= 1; --l) {
    if (bit[l]) {
      tail = l;
      break;
    }
  }
  out.is_full = bit[0] == 1 && tail == 0;
  out.at_most_one = bit[0] == 0 || out.is_full;

  out.value = static_cast<double>(bit[0]);
  for (int l = 1; l <= max_len; ++l) {
    if (bit[l]) out.value += std::ldexp(1.0, -l);
  }

  if (tail == 0) {
    out.num = bit[0];
    out.den = 1;
  } else if (tail <= 62) {
    unsigned __int128 num = static_cast<unsigned __int128>(bit[0]) << tail;
    for (int l = 1; l <= tail; ++l) {
      if (bit[l]) num += static_cast<unsigned __int128>(1) << (tail - l);
    }
    if (num <= static_cast<unsigned __int128>(
                   std::numeric_limits<std::uint64_t>::max())) {
      out.num = static_cast<std::uint64_t>(num);
      out.den = std::uint64_t{1} << tail;
    } else {
      out.exact = false;
    }
  } else {
    out.exact = false;
  }
  return out;
}

std::string encode(const CodeBook& book,
                   const std::vector<std::size_t>& message) {
  std::string out;
  for (std::size_t sym : message) {
    if (sym >= book.size()) {
      throw Error(Errc::unknown_symbol,
                  "symbol index " + std::to_string(sym) + " not in codebook");
    }
    out += book.entries[sym].word;
  }
  return out;
}

namespace {

struct Trie {
  struct Node {
    int child[2] = {-1, -1};
    int symbol = -1;
  };
  std::vector<Node> nodes{1};

  void insert(const std::string& word, int symbol) {
    int at = 0;
    for (char c : word) {
      if (c != '0' && c != '1') {
        throw Error(Errc::bad_format, "codeword contains non-bit characters");
      }
      if (nodes[at].symbol >= 0) {
        throw Error(Errc::bad_format, "codebook is not prefix-free");
      }
      int next = nodes[at].child[c - '0'];
      if (next < 0) {
        next = static_cast<int>(nodes.size());
        nodes.emplace_back();  // may reallocate; index afterwards
        nodes[at].child[c - '0'] = next;
      }
      at = next;
    }
    if (nodes[at].symbol >= 0 || nodes[at].child[0] >= 0 ||
        nodes[at].child[1] >= 0) {
      throw Error(Errc::bad_format, "codebook is not prefix-free");
    }
    nodes[at].symbol = symbol;
  }
};

}  // namespace

std::vector<std::size_t> decode(const CodeBook& book, std::string_view bits) {
  if (bits.empty()) return {};
  Trie trie;
  for (std::size_t i = 0; i < book.size(); ++i) {
    trie.insert(book.entries[i].word, static_cast<int>(i));
  }
  if (trie.nodes[0].symbol >= 0) {
    // degenerate single-symbol book with the empty codeword
    throw Error(Errc::no_match, "no codeword matches at offset 1");
  }

  std::vector<std::size_t> out;
  std::size_t start = 0;  // where the current codeword began
  int at = 0;
  for (std::size_t pos = 0; pos < bits.size(); ++pos) {
    const char c = bits[pos];
    if (c != '0' && c != '1') {
      throw Error(Errc::bad_format,
                  "non-bit character at offset " + std::to_string(pos + 1));
    }
    const int next = trie.nodes[at].child[c - '0'];
    if (next < 0) {
      throw Error(Errc::no_match,
                  "no codeword matches at offset " + std::to_string(start + 1));
    }
    at = next;
    if (trie.nodes[at].symbol >= 0) {
      out.push_back(static_cast<std::size_t>(trie.nodes[at].symbol));
      at = 0;
      start = pos + 1;
    }
  }
  if (at != 0) {
    throw Error(Errc::dangling_suffix,
                "dangling suffix at offset " + std::to_string(start + 1));
  }
  return out;
}

std::size_t CodeTree::leaf_count() const {
  std::size_t leaves = 0;
  for (const auto& node : nodes) {
    if (node.left < 0 && node.right < 0) ++leaves;
  }
  return leaves;
}

bool CodeTree::is_full() const {
  for (const auto& node : nodes) {
    if ((node.left < 0) != (node.right < 0)) return false;
  }
  return true;
}

int CodeTree::max_right_edges() const {
  if (nodes.empty()) return 0;
  int best = 0;
  // iterative DFS over (node, right edges so far)
  std::vector<std::pair<int, int>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [at, ones] = stack.back();
    stack.pop_back();
    const Node& node = nodes[at];
    if (node.left < 0 && node.right < 0) {
      best = std::max(best, ones);
      continue;
    }
    if (node.left >= 0) stack.push_back({node.left, ones});
    if (node.right >= 0) stack.push_back({node.right, ones + 1});
  }
  return best;
}

std::vector<std::string> CodeTree::codewords() const {
  int max_symbol = -1;
  for (const auto& node : nodes) max_symbol = std::max(max_symbol, node.symbol);
  std::vector<std::string> words(max_symbol + 1);
  if (nodes.empty()) return words;

  std::vector<std::pair<int, std::string>> stack{{0, ""}};
  while (!stack.empty()) {
    auto [at, path] = std::move(stack.back());
    stack.pop_back();
    const Node& node = nodes[at];
    if (node.left < 0 && node.right < 0) {
      if (node.symbol >= 0) words[node.symbol] = path;
      continue;
    }
    if (node.left >= 0) stack.push_back({node.left, path + '0'});
    if (node.right >= 0) stack.push_back({node.right, path + '1'});
  }
  return words;
}

}  // namespace onebound
