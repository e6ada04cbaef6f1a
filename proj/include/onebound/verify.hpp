#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "onebound/dp.hpp"

namespace onebound::verify {

/// First split-monotonicity violation R(i,j,w) <= R(i,j+1,w) <= R(i+1,j+1,w)
/// in the table, formatted for humans; nullopt when the table is clean.
std::optional<std::string> find_split_monotonicity_violation(
    const dp::CostTable& table);

/// First quadrangle-inequality violation among finite entries,
/// C(i,j,w) + C(i',j',w) <= C(i,j',w) + C(i',j,w). Exhaustive for small n,
/// `samples` random quadruples otherwise.
std::optional<std::string> find_quadrangle_violation(
    const dp::CostTable& table, std::uint64_t seed, int samples = 4000);

struct VerifyConfig {
  int n_max = 7;        // exhaustive oracle sweep cap
  int d_max = 4;
  int weight_max = 3;   // exhaustive weights {1..weight_max}
  int trials = 100;     // randomized naive/ky identity instances
  int random_n_max = 60;
  int random_d_max = 8;
  std::uint64_t seed = 1;
  bool perturb = false;  // test-only: corrupt one split entry
};

struct CheckOutcome {
  std::string name;
  bool pass = false;
  std::uint64_t cases = 0;
  std::string counterexample;  // first failing instance, verbatim
};

/// Runs the oracle-equivalence, table-identity, split-monotonicity,
/// quadrangle and full-multiset agreement suites.
std::vector<CheckOutcome> run_verification(const VerifyConfig& config);

/// Distinct leaf-depth multisets of full binary trees with up to
/// `max_leaves` leaves (every multiset with kraft sum exactly 1).
std::vector<std::vector<int>> full_tree_length_multisets(int max_leaves);

}  // namespace onebound::verify
