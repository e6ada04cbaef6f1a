#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "onebound/core.hpp"

namespace onebound::prefix {

/// Solution of the ones-budgeted prefix-code problem. The codebook lists
/// symbols in their original order; `permutation` and `sorted_words`
/// expose the ascending-weight view the solver used internally, whose
/// leaves sit consecutively left to right with nonincreasing lengths.
struct PrefixSolution {
  CodeBook book;
  Cost cost = 0;
  std::vector<std::size_t> permutation;  // permutation[k] = original index
  std::vector<std::string> sorted_words; // codewords in sorted order
};

/// Stable-sorts the weights ascending, solves the alphabetic problem on
/// the sorted distribution, and maps the codewords back. The cost does
/// not depend on the input ordering of the weights.
PrefixSolution optimal_prefix(const Distribution& dist, int budget);

/// Float-weight variant used by the CLI when exact scaling is impossible.
std::pair<CodeBook, double> optimal_prefix_real(
    const std::vector<double>& weights, int budget,
    const std::vector<std::string>& labels = {});

/// Smallest D at which the budgeted prefix optimum matches the Huffman
/// cost; at most floor(log2 n), and 0 for a single symbol.
int prefix_binding_threshold(const Distribution& dist);

/// Smallest D at which the budgeted alphabetic optimum matches the
/// unconstrained alphabetic optimum C(1,n,n-1); 0 for a single symbol.
int alphabetic_binding_threshold(const Distribution& dist);

}  // namespace onebound::prefix
