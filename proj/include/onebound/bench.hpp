#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace onebound::bench {

struct BenchRow {
  int n = 0;
  int budget = 0;
  std::string algo;  // "naive" | "ky"
  double wall_ms = 0.0;
  std::uint64_t split_candidates = 0;
};

/// Solves one random integer-weight instance per size with both
/// algorithms, asserting table equality before timings are reported.
/// Deterministic in (sizes, budget, seed) apart from the wall clock.
std::vector<BenchRow> run(const std::vector<int>& sizes, int budget,
                          std::uint64_t seed);

std::string to_csv(const std::vector<BenchRow>& rows);

/// Least-squares slope of log(count) against log(n).
double loglog_slope(const std::vector<std::pair<int, std::uint64_t>>& points);

}  // namespace onebound::bench
