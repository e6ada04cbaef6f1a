#include "onebound/verify.hpp"

#include <random>
#include <set>
#include <sstream>

#include "onebound/kraft.hpp"
#include "onebound/oracle.hpp"

namespace onebound::verify {

namespace {

std::string format_weights(const std::vector<Weight>& weights) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i) os << ",";
    os << weights[i];
  }
  os << "]";
  return os.str();
}

std::string format_lengths(const std::vector<int>& lengths) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (i) os << ",";
    os << lengths[i];
  }
  os << "}";
  return os.str();
}

}  // namespace

std::optional<std::string> find_split_monotonicity_violation(
    const dp::CostTable& t) {
  for (int w = 1; w <= t.budget; ++w) {
    for (int i = 1; i <= t.n; ++i) {
      for (int j = i; j + 1 <= t.n; ++j) {
        const int r_ij = t.split_at(i, j, w);
        const int r_ij1 = t.split_at(i, j + 1, w);
        const int r_i1j1 = t.split_at(i + 1, j + 1, w);
        if (r_ij > r_ij1 || r_ij1 > r_i1j1) {
          std::ostringstream os;
          os << "split monotonicity broken at w=" << w << " i=" << i
             << " j=" << j << ": R(i,j)=" << r_ij << " R(i,j+1)=" << r_ij1
             << " R(i+1,j+1)=" << r_i1j1;
          return os.str();
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> find_quadrangle_violation(const dp::CostTable& t,
                                                     std::uint64_t seed,
                                                     int samples) {
  const Cost inf = dp::infeasible_cost<Cost>();
  auto check = [&](int i, int i2, int j, int j2,
                   int w) -> std::optional<std::string> {
    const Cost a = t.at(i, j, w);
    const Cost b = t.at(i2, j2, w);
    const Cost c = t.at(i, j2, w);
    const Cost d = t.at(i2, j, w);
    if (a == inf || b == inf || c == inf || d == inf) return std::nullopt;
    if (a + b > c + d) {
      std::ostringstream os;
      os << "quadrangle inequality broken at w=" << w << " (i,i',j,j')=(" << i
         << "," << i2 << "," << j << "," << j2 << "): " << a << "+" << b
         << " > " << c << "+" << d;
      return os.str();
    }
    return std::nullopt;
  };

  if (t.n <= 16) {
    for (int w = 0; w <= t.budget; ++w)
      for (int i = 1; i <= t.n; ++i)
        for (int i2 = i; i2 <= t.n; ++i2)
          for (int j = i2; j <= t.n; ++j)
            for (int j2 = j; j2 <= t.n; ++j2)
              if (auto bad = check(i, i2, j, j2, w)) return bad;
    return std::nullopt;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(1, t.n);
  std::uniform_int_distribution<int> layer(0, t.budget);
  for (int trial = 0; trial < samples; ++trial) {
    int v[4] = {pick(rng), pick(rng), pick(rng), pick(rng)};
    std::sort(v, v + 4);
    if (auto bad = check(v[0], v[1], v[2], v[3], layer(rng))) return bad;
  }
  return std::nullopt;
}

std::vector<std::vector<int>> full_tree_length_multisets(int max_leaves) {
  std::set<std::vector<int>> seen;
  for (int m = 2; m <= max_leaves; ++m) {
    for (const auto& shape : oracle::tree_shapes(m)) {
      std::vector<int> depths;
      depths.reserve(shape.size());
      for (auto st : shape) depths.push_back(st.depth);
      std::sort(depths.begin(), depths.end());
      seen.insert(std::move(depths));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<CheckOutcome> run_verification(const VerifyConfig& config) {
  std::vector<CheckOutcome> out;
  const Cost inf = dp::infeasible_cost<Cost>();

  CheckOutcome oracle_check{"oracle-alphabetic", true, 0, ""};
  CheckOutcome mono{"split-monotonicity", true, 0, ""};
  CheckOutcome quad{"quadrangle-inequality", true, 0, ""};

  // exhaustive weight vectors over {1..weight_max}^n
  for (int n = 1; n <= config.n_max && oracle_check.pass; ++n) {
    std::vector<Weight> weights(n, 1);
    bool more = true;
    while (more && oracle_check.pass) {
      Distribution dist{weights, {}};
      auto table =
          dp::cost_table<Cost>(dist.weights, config.d_max, dp::Algo::knuth_yao);
      for (int d = 0; d <= config.d_max; ++d) {
        ++oracle_check.cases;
        const auto expect = oracle::brute_alphabetic(dist, d);
        const Cost got = table.at(1, n, d);
        const bool got_feasible = got != inf;
        if (expect.has_value() != got_feasible ||
            (expect.has_value() && *expect != got)) {
          std::ostringstream os;
          os << "weights=" << format_weights(weights) << " D=" << d
             << " expected="
             << (expect ? std::to_string(*expect) : std::string("infeasible"))
             << " got="
             << (got_feasible ? std::to_string(got) : std::string("infeasible"));
          oracle_check.pass = false;
          oracle_check.counterexample = os.str();
          break;
        }
      }
      if (mono.pass) {
        ++mono.cases;
        if (auto bad = find_split_monotonicity_violation(table)) {
          mono.pass = false;
          mono.counterexample =
              "weights=" + format_weights(weights) + ": " + *bad;
        }
      }
      if (quad.pass) {
        ++quad.cases;
        if (auto bad = find_quadrangle_violation(table, config.seed)) {
          quad.pass = false;
          quad.counterexample =
              "weights=" + format_weights(weights) + ": " + *bad;
        }
      }
      // odometer step
      more = false;
      for (int i = n - 1; i >= 0; --i) {
        if (weights[i] < config.weight_max) {
          ++weights[i];
          std::fill(weights.begin() + i + 1, weights.end(), Weight{1});
          more = true;
          break;
        }
      }
    }
  }

  // randomized naive/ky table identity
  CheckOutcome identity{"naive-ky-identity", true, 0, ""};
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<int> pick_n(1, config.random_n_max);
  std::uniform_int_distribution<int> pick_d(0, config.random_d_max);
  std::uniform_int_distribution<Weight> pick_w(1, 100);
  bool perturb_pending = config.perturb;
  for (int trial = 0; trial < config.trials && identity.pass; ++trial) {
    const int n = pick_n(rng);
    const int d = pick_d(rng);
    std::vector<Weight> weights(n);
    for (auto& w : weights) w = pick_w(rng);

    auto naive = dp::cost_table<Cost>(weights, d, dp::Algo::naive);
    auto ky = dp::cost_table<Cost>(weights, d, dp::Algo::knuth_yao);
    if (perturb_pending && n >= 3 && d >= 1) {
      // test-only fault injection: nudge one split entry
      auto& r = ky.split[ky.index(1, n, d)];
      r = r < n ? r + 1 : r - 1;
      perturb_pending = false;
    }
    ++identity.cases;
    for (std::size_t idx = 0; idx < naive.cost.size(); ++idx) {
      if (naive.cost[idx] != ky.cost[idx] || naive.split[idx] != ky.split[idx]) {
        const int w = static_cast<int>(idx / (static_cast<std::size_t>(n) * n));
        const int i = static_cast<int>(idx / n % n) + 1;
        const int j = static_cast<int>(idx % n) + 1;
        std::ostringstream os;
        os << "weights=" << format_weights(weights) << " D=" << d
           << " first difference at (i,j,w)=(" << i << "," << j << "," << w
           << "): naive C=" << naive.cost[idx] << " R=" << naive.split[idx]
           << "; ky C=" << ky.cost[idx] << " R=" << ky.split[idx];
        identity.pass = false;
        identity.counterexample = os.str();
        break;
      }
    }
    if (identity.pass && mono.pass) {
      ++mono.cases;
      if (auto bad = find_split_monotonicity_violation(ky)) {
        mono.pass = false;
        mono.counterexample = "weights=" + format_weights(weights) + ": " + *bad;
      }
    }
    if (identity.pass && quad.pass) {
      ++quad.cases;
      if (auto bad = find_quadrangle_violation(ky, config.seed + trial)) {
        quad.pass = false;
        quad.counterexample = "weights=" + format_weights(weights) + ": " + *bad;
      }
    }
  }

  // full-multiset agreement between the inequality check and the oracle
  CheckOutcome agreement{"full-multiset-agreement", true, 0, ""};
  const int leaf_cap = std::min(config.n_max, 8);
  for (const auto& lengths : full_tree_length_multisets(leaf_cap)) {
    if (!agreement.pass) break;
    for (int d = 1; d <= config.d_max; ++d) {
      ++agreement.cases;
      const auto report = kraft::check_feasibility(lengths, d);
      const bool oracle_says = oracle::brute_feasible(lengths, d);
      const bool check_says = report.verdict == kraft::Verdict::feasible;
      if (report.verdict == kraft::Verdict::indeterminate ||
          check_says != oracle_says) {
        std::ostringstream os;
        os << "lengths=" << format_lengths(lengths) << " D=" << d
           << " verdict=" << kraft::to_string(report.verdict)
           << " oracle=" << (oracle_says ? "feasible" : "infeasible");
        agreement.pass = false;
        agreement.counterexample = os.str();
        break;
      }
    }
  }

  out.push_back(std::move(oracle_check));
  out.push_back(std::move(identity));
  out.push_back(std::move(mono));
  out.push_back(std::move(quad));
  out.push_back(std::move(agreement));
  return out;
}

}  // namespace onebound::verify
