#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "onebound/core.hpp"
#include "onebound/dp.hpp"
#include "onebound/kraft.hpp"
#include "onebound/oracle.hpp"
#include "onebound/prefix.hpp"

namespace py = pybind11;
using namespace onebound;

namespace {

Distribution make_dist(std::vector<Weight> weights) {
  return validate_distribution(std::move(weights));
}

dp::Algo parse_algo(const std::string& name) {
  if (name == "naive") return dp::Algo::naive;
  if (name == "ky") return dp::Algo::knuth_yao;
  throw Error(Errc::bad_format, "algo must be 'naive' or 'ky'");
}

std::vector<std::string> words_of(const CodeBook& book) {
  std::vector<std::string> words;
  words.reserve(book.size());
  for (const auto& e : book.entries) words.push_back(e.word);
  return words;
}

py::dict feasibility_dict(const kraft::Feasibility& report) {
  py::dict out;
  out["verdict"] = std::string(kraft::to_string(report.verdict));
  py::list levels;
  for (const auto& row : report.levels) {
    py::dict r;
    r["level"] = row.level;
    r["count"] = row.count;
    r["capacity"] = row.capacity;
    r["blocked_next"] = row.blocked;
    r["bound"] = row.bound;
    r["slack"] = row.slack;
    r["ok"] = row.ok;
    levels.append(std::move(r));
  }
  out["levels"] = std::move(levels);
  out["kraft_is_full"] = report.kraft.is_full;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "minimum average-length binary codes in which every codeword carries "
      "at most D ones";

  py::register_exception<Error>(m, "CodeError");

  m.def(
      "optimal_alphabetic",
      [](std::vector<Weight> weights, int max_ones, const std::string& algo) {
        auto [book, cost] =
            dp::optimal_alphabetic(make_dist(std::move(weights)), max_ones,
                                   parse_algo(algo));
        return py::make_tuple(cost, words_of(book));
      },
      py::arg("weights"), py::arg("max_ones"), py::arg("algo") = "ky",
      "Optimal order-preserving code; returns (cost, codewords).");

  m.def(
      "optimal_prefix",
      [](std::vector<Weight> weights, int max_ones) {
        auto solution =
            prefix::optimal_prefix(make_dist(std::move(weights)), max_ones);
        return py::make_tuple(solution.cost, words_of(solution.book));
      },
      py::arg("weights"), py::arg("max_ones"),
      "Optimal prefix code; returns (cost, codewords in input order).");

  m.def(
      "prefix_binding_threshold",
      [](std::vector<Weight> weights) {
        return prefix::prefix_binding_threshold(make_dist(std::move(weights)));
      },
      py::arg("weights"));

  m.def(
      "alphabetic_binding_threshold",
      [](std::vector<Weight> weights) {
        return prefix::alphabetic_binding_threshold(
            make_dist(std::move(weights)));
      },
      py::arg("weights"));

  m.def(
      "check_feasibility",
      [](const std::vector<int>& lengths, int max_ones) {
        return feasibility_dict(kraft::check_feasibility(lengths, max_ones));
      },
      py::arg("lengths"), py::arg("max_ones"));

  m.def(
      "build_from_lengths",
      [](const std::vector<int>& lengths, int max_ones) {
        return words_of(kraft::build_from_lengths(lengths, max_ones));
      },
      py::arg("lengths"), py::arg("max_ones"));

  m.def("level_capacity", &kraft::level_capacity, py::arg("level"),
        py::arg("max_ones"));

  m.def(
      "kraft_sum",
      [](const std::vector<int>& lengths) {
        const KraftSum k = kraft_sum(lengths);
        py::dict out;
        out["is_full"] = k.is_full;
        out["at_most_one"] = k.at_most_one;
        out["value"] = k.value;
        if (k.exact) {
          out["numerator"] = k.num;
          out["denominator"] = k.den;
        }
        return out;
      },
      py::arg("lengths"));

  m.def(
      "encode",
      [](const std::vector<std::string>& codewords,
         const std::vector<std::size_t>& message) {
        CodeBook book = make_codebook(CodeMode::prefix, 0, codewords);
        return encode(book, message);
      },
      py::arg("codewords"), py::arg("message"));

  m.def(
      "decode",
      [](const std::vector<std::string>& codewords, const std::string& bits) {
        CodeBook book = make_codebook(CodeMode::prefix, 0, codewords);
        return decode(book, bits);
      },
      py::arg("codewords"), py::arg("bits"));

  m.def(
      "average_cost",
      [](std::vector<Weight> weights,
         const std::vector<std::string>& codewords) {
        CodeBook book = make_codebook(CodeMode::prefix, 0, codewords);
        auto summary = average_cost(book, make_dist(std::move(weights)));
        return py::make_tuple(summary.raw, summary.normalized);
      },
      py::arg("weights"), py::arg("codewords"));

  m.def("ones_count",
        [](const std::string& bits) { return ones_count(bits); },
        py::arg("bits"));

  m.def(
      "huffman_cost",
      [](std::vector<Weight> weights) {
        return oracle::huffman_cost(make_dist(std::move(weights)));
      },
      py::arg("weights"));

  m.def(
      "brute_alphabetic",
      [](std::vector<Weight> weights, int max_ones) {
        return oracle::brute_alphabetic(make_dist(std::move(weights)),
                                        max_ones);
      },
      py::arg("weights"), py::arg("max_ones"),
      "Exhaustive reference; None when the budget admits no tree.");

  m.def(
      "brute_prefix",
      [](std::vector<Weight> weights, int max_ones) {
        return oracle::brute_prefix(make_dist(std::move(weights)), max_ones);
      },
      py::arg("weights"), py::arg("max_ones"));

  m.def("brute_feasible", &oracle::brute_feasible, py::arg("lengths"),
        py::arg("max_ones"));
}
