#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "onebound/dp.hpp"
#include "onebound/oracle.hpp"
#include "onebound/verify.hpp"

using namespace onebound;

namespace {

const Cost kInf = dp::infeasible_cost<Cost>();

dp::CostTable table_of(std::vector<Weight> weights, int budget,
                       dp::Algo algo = dp::Algo::knuth_yao) {
  return dp::cost_table<Cost>(weights, budget, algo);
}

}  // namespace

TEST_CASE("two symbols") {
  auto t = table_of({7, 4}, 1);
  CHECK(t.at(1, 2, 1) == 11);
  CHECK(t.split_at(1, 2, 1) == 2);

  auto zero = table_of({7, 4}, 0);
  CHECK(zero.at(1, 2, 0) == kInf);
  CHECK_FALSE(zero.feasible());
}

TEST_CASE("three symbols, budget one and two") {
  auto t1 = table_of({5, 3, 2}, 1);
  CHECK(t1.at(1, 3, 1) == 18);
  auto t2 = table_of({5, 3, 2}, 2);
  CHECK(t2.at(1, 3, 2) == 15);
  // layers below the full budget agree with the smaller table
  CHECK(t2.at(1, 3, 1) == 18);
}

TEST_CASE("single symbol costs nothing at any budget") {
  auto t = table_of({9}, 0);
  CHECK(t.at(1, 1, 0) == 0);
  CHECK(t.feasible());
}

TEST_CASE("uniform four symbols, budget one") {
  auto t = table_of({1, 1, 1, 1}, 1);
  CHECK(t.at(1, 4, 1) == 9);
}

TEST_CASE("base cases C(i,i,w)=0 and C(i,j,0) infeasible") {
  auto t = table_of({2, 4, 1, 3}, 3);
  for (int w = 0; w <= 3; ++w) {
    for (int i = 1; i <= 4; ++i) CHECK(t.at(i, i, w) == 0);
  }
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) CHECK(t.at(i, j, 0) == kInf);
  }
}

TEST_CASE("cost is nonincreasing in the ones budget") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 14)(rng);
    std::vector<Weight> w(n);
    for (auto& x : w) x = std::uniform_int_distribution<Weight>(1, 30)(rng);
    auto t = table_of(w, n - 1);
    for (int d = 2; d <= n - 1; ++d) {
      CHECK(t.at(1, n, d) <= t.at(1, n, d - 1));
    }
    // at budget n-1 every path fits, so deeper budgets change nothing
    auto wide = table_of(w, n + 2);
    CHECK(wide.at(1, n, n + 2) == t.at(1, n, n - 1));
  }
}

TEST_CASE("largest minimizing split is kept") {
  // uniform triple at budget 2: k=2 and k=3 both reach cost 5, the scan
  // keeps k=3
  auto t = table_of({1, 1, 1}, 2);
  CHECK(t.at(1, 3, 2) == 5);
  CHECK(t.at(1, 1, 2) + t.at(2, 3, 1) == t.at(1, 2, 2) + t.at(3, 3, 1));
  CHECK(t.split_at(1, 3, 2) == 3);
}

TEST_CASE("naive and ky agree entry-for-entry on random instances") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 32)(rng);
    const int d = std::uniform_int_distribution<int>(0, 6)(rng);
    std::vector<Weight> w(n);
    for (auto& x : w) x = std::uniform_int_distribution<Weight>(1, 50)(rng);
    auto naive = table_of(w, d, dp::Algo::naive);
    auto ky = table_of(w, d, dp::Algo::knuth_yao);
    REQUIRE(naive.cost == ky.cost);
    REQUIRE(naive.split == ky.split);
    CHECK(ky.examined_total() <= naive.examined_total());
  }
}

TEST_CASE("ky split-candidate work stays quadratic per layer") {
  std::mt19937_64 rng(3);
  const int n = 150;
  std::vector<Weight> w(n);
  for (auto& x : w) x = std::uniform_int_distribution<Weight>(1, 1000)(rng);
  auto t = table_of(w, 4);
  for (int layer = 1; layer <= 4; ++layer) {
    CHECK(t.examined_per_layer[layer] <=
          3 * static_cast<std::uint64_t>(n) * n);
  }
}

TEST_CASE("reconstruct_tree") {
  SUBCASE("two symbols") {
    auto t = table_of({3, 9}, 1);
    auto tree = dp::reconstruct_tree(t);
    CHECK(tree.codewords() == std::vector<std::string>{"0", "1"});
  }
  SUBCASE("worked three-symbol instances") {
    auto t1 = dp::reconstruct_tree(table_of({5, 3, 2}, 1));
    CHECK(t1.codewords() == std::vector<std::string>{"00", "01", "1"});
    auto t2 = dp::reconstruct_tree(table_of({5, 3, 2}, 2));
    CHECK(t2.codewords() == std::vector<std::string>{"0", "10", "11"});
  }
  SUBCASE("infeasible table refuses") {
    CHECK_THROWS_AS(dp::reconstruct_tree(table_of({1, 1}, 0)), Error);
  }
  SUBCASE("tree structure invariants on random instances") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = std::uniform_int_distribution<int>(1, 20)(rng);
      const int d = std::uniform_int_distribution<int>(1, 5)(rng);
      std::vector<Weight> w(n);
      for (auto& x : w) x = std::uniform_int_distribution<Weight>(1, 9)(rng);
      auto table = table_of(w, d);
      auto tree = dp::reconstruct_tree(table);
      CHECK(tree.is_full());
      CHECK(tree.leaf_count() == static_cast<std::size_t>(n));
      CHECK(tree.max_right_edges() <= d);
      // depths weighted by the input reproduce the table cost
      auto words = tree.codewords();
      Cost cost = 0;
      for (int i = 0; i < n; ++i) {
        cost += w[i] * static_cast<Cost>(words[i].size());
      }
      CHECK(cost == table.at(1, n, d));
    }
  }
}

TEST_CASE("optimal_alphabetic") {
  auto dist = validate_distribution({5, 3, 2});
  auto [book, cost] = dp::optimal_alphabetic(dist, 1);
  CHECK(cost == 18);
  CHECK(book.mode == CodeMode::alphabetic);
  CHECK(book.is_alphabetic());
  CHECK(book.entries[0].word == "00");
  CHECK(book.entries[1].word == "01");
  CHECK(book.entries[2].word == "1");

  SUBCASE("single symbol gets the empty codeword") {
    auto one = validate_distribution({1});
    auto [b, c] = dp::optimal_alphabetic(one, 3);
    CHECK(c == 0);
    CHECK(b.entries.size() == 1);
    CHECK(b.entries[0].word == "");
  }
  SUBCASE("budget zero with several symbols is infeasible") {
    try {
      dp::optimal_alphabetic(dist, 0);
      FAIL("expected Infeasible");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::infeasible);
    }
  }
  SUBCASE("naive algorithm emits the identical book") {
    auto [b2, c2] = dp::optimal_alphabetic(dist, 1, dp::Algo::naive);
    CHECK(c2 == 18);
    for (std::size_t i = 0; i < book.entries.size(); ++i) {
      CHECK(b2.entries[i].word == book.entries[i].word);
    }
  }
}

TEST_CASE("dp matches the exhaustive oracle on small exhaustive sweeps") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<Weight> w(n, 1);
    bool more = true;
    while (more) {
      auto dist = validate_distribution(w);
      auto table = table_of(w, 4);
      for (int d = 0; d <= 4; ++d) {
        auto expect = oracle::brute_alphabetic(dist, d);
        const Cost got = table.at(1, n, d);
        if (expect) {
          CHECK(got == *expect);
        } else {
          CHECK(got == kInf);
        }
      }
      more = false;
      for (int i = n - 1; i >= 0; --i) {
        if (w[i] < 3) {
          ++w[i];
          std::fill(w.begin() + i + 1, w.end(), Weight{1});
          more = true;
          break;
        }
      }
    }
  }
}

TEST_CASE("split monotonicity and quadrangle inequality on random tables") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 24)(rng);
    const int d = std::uniform_int_distribution<int>(1, 5)(rng);
    std::vector<Weight> w(n);
    for (auto& x : w) x = std::uniform_int_distribution<Weight>(1, 40)(rng);
    auto t = table_of(w, d);
    auto mono = verify::find_split_monotonicity_violation(t);
    CHECK_MESSAGE(!mono.has_value(), mono.value_or(""));
    auto quad = verify::find_quadrangle_violation(t, trial);
    CHECK_MESSAGE(!quad.has_value(), quad.value_or(""));
  }
}

TEST_CASE("low-memory solver matches the full table") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 24)(rng);
    const int d = std::uniform_int_distribution<int>(0, 5)(rng);
    std::vector<Weight> w(n);
    for (auto& x : w) x = std::uniform_int_distribution<Weight>(1, 50)(rng);
    auto full = table_of(w, d);
    auto lean = dp::cost_splits_lowmem(w, d, dp::Algo::knuth_yao);
    CHECK(lean.feasible == full.feasible());
    CHECK(lean.split == full.split);
    if (full.feasible()) {
      CHECK(lean.optimal == full.at(1, n, d));
      auto a = dp::reconstruct_tree(full).codewords();
      auto b = dp::reconstruct_tree(lean).codewords();
      CHECK(a == b);
    }
  }
}

TEST_CASE("float-weight solver agrees with the exact one on integers") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 16)(rng);
    const int d = std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<Weight> w(n);
    std::vector<double> rw(n);
    for (int i = 0; i < n; ++i) {
      w[i] = std::uniform_int_distribution<Weight>(1, 20)(rng);
      rw[i] = static_cast<double>(w[i]);
    }
    auto [book, cost] = dp::optimal_alphabetic(validate_distribution(w), d);
    auto [rbook, rcost] = dp::optimal_alphabetic_real(rw, d);
    CHECK(rcost == doctest::Approx(static_cast<double>(cost)));
    for (std::size_t i = 0; i < book.entries.size(); ++i) {
      CHECK(book.entries[i].word == rbook.entries[i].word);
    }
  }
}
