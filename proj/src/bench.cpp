#include "onebound/bench.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "onebound/dp.hpp"

namespace onebound::bench {

namespace {

double ms_between(std::chrono::steady_clock::time_point a,
                  std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double, std::milli>(b - a).count();
}

}  // namespace

std::vector<BenchRow> run(const std::vector<int>& sizes, int budget,
                          std::uint64_t seed) {
  std::vector<BenchRow> rows;
  for (int n : sizes) {
    if (n < 1) throw Error(Errc::bad_format, "bench sizes must be >= 1");
    // one stream per size so the sweep order does not matter
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL *
                                static_cast<std::uint64_t>(n + 1)));
    std::uniform_int_distribution<Cost> pick(1, 1000);
    std::vector<Cost> weights(n);
    for (auto& w : weights) w = pick(rng);

    const auto t0 = std::chrono::steady_clock::now();
    const auto naive = dp::cost_table<Cost>(weights, budget, dp::Algo::naive);
    const auto t1 = std::chrono::steady_clock::now();
    const auto ky = dp::cost_table<Cost>(weights, budget, dp::Algo::knuth_yao);
    const auto t2 = std::chrono::steady_clock::now();

    if (naive.cost != ky.cost || naive.split != ky.split) {
      throw Error(Errc::verification_failed,
                  "naive and ky tables differ at n=" + std::to_string(n));
    }
    rows.push_back(
        {n, budget, "naive", ms_between(t0, t1), naive.examined_total()});
    rows.push_back({n, budget, "ky", ms_between(t1, t2), ky.examined_total()});
  }
  return rows;
}

std::string to_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "n,D,algo,wall_ms,split_candidates\n";
  for (const auto& row : rows) {
    os << row.n << "," << row.budget << "," << row.algo << ",";
    os.setf(std::ios::fixed);
    os.precision(3);
    os << row.wall_ms;
    os.unsetf(std::ios::fixed);
    os << "," << row.split_candidates << "\n";
  }
  return os.str();
}

double loglog_slope(const std::vector<std::pair<int, std::uint64_t>>& points) {
  if (points.size() < 2) return 0.0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(points.size());
  for (const auto& [n, count] : points) {
    const double x = std::log(static_cast<double>(n));
    const double y = std::log(static_cast<double>(count > 0 ? count : 1));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace onebound::bench
