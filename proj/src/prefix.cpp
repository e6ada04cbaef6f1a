#include "onebound/prefix.hpp"

#include <algorithm>
#include <numeric>

#include "onebound/dp.hpp"
#include "onebound/oracle.hpp"

namespace onebound::prefix {

namespace {

std::vector<std::size_t> ascending_order(std::size_t n,
                                         const std::vector<Weight>& weights) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  // stable: equal weights keep their input order, so the emitted book
  // is deterministic
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return weights[a] < weights[b];
  });
  return order;
}

}  // namespace

PrefixSolution optimal_prefix(const Distribution& dist, int budget) {
  const std::size_t n = dist.size();
  PrefixSolution out;
  out.permutation = ascending_order(n, dist.weights);

  Distribution sorted;
  sorted.weights.reserve(n);
  sorted.labels.reserve(n);
  for (std::size_t k : out.permutation) {
    sorted.weights.push_back(dist.weights[k]);
    sorted.labels.push_back(dist.label(k));
  }

  auto [sorted_book, cost] = dp::optimal_alphabetic(sorted, budget);
  out.cost = cost;
  out.sorted_words.reserve(n);
  for (const auto& e : sorted_book.entries) out.sorted_words.push_back(e.word);

  std::vector<std::string> words(n);
  for (std::size_t k = 0; k < n; ++k) {
    words[out.permutation[k]] = out.sorted_words[k];
  }
  out.book = make_codebook(CodeMode::prefix, budget, std::move(words),
                           dist.labels);
  return out;
}

std::pair<CodeBook, double> optimal_prefix_real(
    const std::vector<double>& weights, int budget,
    const std::vector<std::string>& labels) {
  const std::size_t n = weights.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return weights[a] < weights[b];
  });
  std::vector<double> sorted;
  sorted.reserve(n);
  for (std::size_t k : order) sorted.push_back(weights[k]);

  auto [sorted_book, cost] = dp::optimal_alphabetic_real(sorted, budget);
  std::vector<std::string> words(n);
  for (std::size_t k = 0; k < n; ++k) {
    words[order[k]] = sorted_book.entries[k].word;
  }
  return {make_codebook(CodeMode::prefix, budget, std::move(words), labels),
          cost};
}

int prefix_binding_threshold(const Distribution& dist) {
  if (dist.size() <= 1) return 0;
  const Cost target = oracle::huffman_cost(dist);
  for (int d = 1; d <= static_cast<int>(dist.size()); ++d) {
    if (optimal_prefix(dist, d).cost == target) return d;
  }
  // unreachable: d = n-1 already admits every tree
  throw Error(Errc::verification_failed, "threshold scan did not converge");
}

int alphabetic_binding_threshold(const Distribution& dist) {
  const int n = static_cast<int>(dist.size());
  if (n <= 1) return 0;
  auto table = dp::cost_table<Cost>(dist.weights, n - 1, dp::Algo::knuth_yao);
  const Cost unconstrained = table.at(1, n, n - 1);
  for (int d = 1; d <= n - 1; ++d) {
    if (table.at(1, n, d) == unconstrained) return d;
  }
  throw Error(Errc::verification_failed, "threshold scan did not converge");
}

}  // namespace onebound::prefix
