#include <CLI11.hpp>
#include <algorithm>
#include <iostream>
#include <iterator>
#include <numeric>
#include <sstream>

#include "onebound/bench.hpp"
#include "onebound/core.hpp"
#include "onebound/dp.hpp"
#include "onebound/io.hpp"
#include "onebound/kraft.hpp"
#include "onebound/prefix.hpp"
#include "onebound/verify.hpp"

namespace {

using namespace onebound;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::infeasible:
    case Errc::not_feasible:
      return 1;
    case Errc::verification_failed:
      return 4;
    default:
      return 2;  // invalid input
  }
}

struct Options {
  std::string input;
  std::string out;
  std::string lengths;
  std::string book_path;
  std::string format = "json";
  std::string algo = "ky";
  std::string sizes = "64,128,256,512";
  int budget = 0;
  bool construct = false;
  bool thresholds = false;
  int n_max = 7;
  int d_max = 4;
  int trials = 100;
  std::uint64_t seed = 1;
  bool perturb = false;
};

void emit(const Options& opt, const std::string& payload) {
  if (opt.out.empty()) {
    std::cout << payload;
  } else {
    io::write_file(opt.out, payload);
  }
}

io::LoadedDistribution load_distribution(const Options& opt) {
  if (opt.input.empty()) {
    throw Error(Errc::bad_format, "--input is required");
  }
  if (opt.input == "-") return io::read_distribution(std::cin);
  return io::read_distribution_file(opt.input);
}

dp::Algo parse_algo(const std::string& name) {
  if (name == "naive") return dp::Algo::naive;
  if (name == "ky") return dp::Algo::knuth_yao;
  throw Error(Errc::bad_format, "--algo must be naive or ky");
}

std::string cost_line(double raw, double normalized) {
  std::ostringstream os;
  os << "raw_cost=" << raw << " normalized_cost=" << normalized << "\n";
  return os.str();
}

// raw cost in the user's units: undo the power-of-ten weight scaling
nlohmann::json scaled_raw(Cost raw, int scale_pow10) {
  if (scale_pow10 == 0) return raw;
  double denom = 1.0;
  for (int i = 0; i < scale_pow10; ++i) denom *= 10.0;
  return static_cast<double>(raw) / denom;
}

int run_code_command(const Options& opt, bool alphabetic) {
  const auto loaded = load_distribution(opt);
  const dp::Algo algo = parse_algo(opt.algo);

  CodeBook book;
  nlohmann::json doc;
  double raw = 0;
  double normalized = 0;
  if (!loaded.float_mode) {
    if (alphabetic) {
      book = dp::optimal_alphabetic(loaded.dist, opt.budget, algo).first;
    } else {
      book = prefix::optimal_prefix(loaded.dist, opt.budget).book;
    }
    const CostSummary summary = average_cost(book, loaded.dist);
    doc = io::codebook_to_json(book);
    doc["raw_cost"] = scaled_raw(summary.raw, loaded.scale_pow10);
    doc["normalized_cost"] = summary.normalized;
    raw = static_cast<double>(summary.raw);
    normalized = summary.normalized;
  } else {
    std::cerr << "warning: weights are not exactly representable; "
                 "float mode\n";
    double cost = 0;
    if (alphabetic) {
      std::tie(book, cost) =
          dp::optimal_alphabetic_real(loaded.real_weights, opt.budget,
                                      loaded.labels);
    } else {
      std::tie(book, cost) = prefix::optimal_prefix_real(
          loaded.real_weights, opt.budget, loaded.labels);
    }
    const double total = std::accumulate(loaded.real_weights.begin(),
                                         loaded.real_weights.end(), 0.0);
    doc = io::codebook_to_json(book);
    doc["raw_cost"] = cost;
    doc["normalized_cost"] = cost / total;
    raw = cost;
    normalized = cost / total;
  }

  if (!alphabetic && opt.thresholds) {
    if (loaded.float_mode) {
      throw Error(Errc::bad_format,
                  "--thresholds needs exact integer weights");
    }
    doc["prefix_binding_threshold"] =
        prefix::prefix_binding_threshold(loaded.dist);
    doc["alphabetic_binding_threshold"] =
        prefix::alphabetic_binding_threshold(loaded.dist);
  }

  if (opt.format == "text") {
    std::string text = io::codebook_to_text(book) + cost_line(raw, normalized);
    if (doc.contains("prefix_binding_threshold")) {
      text += "prefix_binding_threshold: " +
              doc["prefix_binding_threshold"].dump() + "\n";
      text += "alphabetic_binding_threshold: " +
              doc["alphabetic_binding_threshold"].dump() + "\n";
    }
    emit(opt, text);
  } else {
    emit(opt, doc.dump(2) + "\n");
  }
  std::cerr << cost_line(raw, normalized);
  return 0;
}

int run_kraft(const Options& opt) {
  std::vector<int> lengths;
  if (!opt.lengths.empty()) {
    lengths = io::parse_lengths(opt.lengths);
  } else if (!opt.input.empty()) {
    const std::string text = io::read_file(opt.input);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
      try {
        for (const auto& v : nlohmann::json::parse(text)) {
          lengths.push_back(v.get<int>());
        }
      } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::bad_format,
                    std::string("bad lengths JSON: ") + e.what());
      }
      if (lengths.empty()) throw Error(Errc::empty_lengths, "no lengths given");
      for (int l : lengths) {
        if (l < 1) {
          throw Error(Errc::non_positive_length, "lengths must be >= 1");
        }
      }
    } else {
      lengths = io::parse_lengths(text);
    }
  } else {
    throw Error(Errc::bad_format, "provide --lengths or --input");
  }

  const auto report = kraft::check_feasibility(lengths, opt.budget);
  nlohmann::json doc = io::feasibility_to_json(report, opt.budget);
  std::string text = io::feasibility_to_text(report, opt.budget);
  if (opt.construct && report.verdict == kraft::Verdict::feasible) {
    const CodeBook book = kraft::build_from_lengths(lengths, opt.budget);
    doc["codebook"] = io::codebook_to_json(book);
    text += io::codebook_to_text(book);
  }
  emit(opt, opt.format == "text" ? text : doc.dump(2) + "\n");

  switch (report.verdict) {
    case kraft::Verdict::feasible:
      return 0;
    case kraft::Verdict::infeasible:
      return 1;
    default:
      std::cerr << "note: the level bounds are sufficient, not necessary, on "
                   "non-full multisets; small instances can be settled "
                   "exhaustively (python: onebound.brute_feasible)\n";
      return 3;
  }
}

CodeBook load_codebook(const Options& opt) {
  if (opt.book_path.empty()) {
    throw Error(Errc::bad_format, "--book is required");
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(io::read_file(opt.book_path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::bad_format, std::string("bad codebook JSON: ") + e.what());
  }
  CodeBook book = io::codebook_from_json(j);
  if (!book.is_prefix_free()) {
    throw Error(Errc::bad_format, "codebook is not prefix-free");
  }
  return book;
}

int run_encode(const Options& opt) {
  const CodeBook book = load_codebook(opt);
  const std::string text =
      opt.input.empty() || opt.input == "-"
          ? std::string(std::istreambuf_iterator<char>(std::cin), {})
          : io::read_file(opt.input);
  const auto message = io::parse_message(text, book);
  const std::string bits = encode(book, message);
  emit(opt, bits.empty() ? bits : bits + "\n");
  return 0;
}

int run_decode(const Options& opt) {
  const CodeBook book = load_codebook(opt);
  std::string bits =
      opt.input.empty() || opt.input == "-"
          ? std::string(std::istreambuf_iterator<char>(std::cin), {})
          : io::read_file(opt.input);
  bits.erase(std::remove_if(bits.begin(), bits.end(),
                            [](unsigned char c) { return std::isspace(c); }),
             bits.end());
  const auto message = decode(book, bits);
  const std::string text = io::format_message(book, message);
  emit(opt, text.empty() ? text : text + "\n");
  return 0;
}

int run_verify(const Options& opt) {
  if (opt.n_max < 1 || opt.n_max > 12) {
    throw Error(Errc::too_large, "--n-max must be in 1..12");
  }
  if (opt.d_max < 0) throw Error(Errc::bad_format, "--d-max must be >= 0");
  verify::VerifyConfig config;
  config.n_max = opt.n_max;
  config.d_max = opt.d_max;
  config.trials = opt.trials;
  config.seed = opt.seed;
  config.perturb = opt.perturb;

  bool all_pass = true;
  for (const auto& check : verify::run_verification(config)) {
    if (check.pass) {
      std::cout << "ok   " << check.name << " (cases=" << check.cases << ")\n";
    } else {
      all_pass = false;
      std::cout << "FAIL " << check.name << ": " << check.counterexample
                << "\n";
    }
  }
  return all_pass ? 0 : 4;
}

int run_bench(const Options& opt) {
  std::vector<int> sizes;
  for (int v : io::parse_lengths(opt.sizes)) sizes.push_back(v);
  const auto rows = bench::run(sizes, opt.budget, opt.seed);
  emit(opt, bench::to_csv(rows));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "minimum average-length binary codes in which every codeword "
      "carries at most D ones"};
  app.require_subcommand(1);
  Options opt;

  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("--input", opt.input, "distribution file ('-' = stdin)");
    cmd->add_option("--out", opt.out, "write output here instead of stdout");
    cmd->add_option("--format", opt.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* alphabetic =
      app.add_subcommand("alphabetic", "optimal order-preserving code");
  add_io(alphabetic);
  alphabetic->add_option("-D,--max-ones", opt.budget, "ones budget")
      ->required();
  alphabetic->add_option("--algo", opt.algo, "naive or ky")
      ->check(CLI::IsMember({"naive", "ky"}));

  CLI::App* prefix_cmd =
      app.add_subcommand("prefix", "optimal prefix code (order-free)");
  add_io(prefix_cmd);
  prefix_cmd->add_option("-D,--max-ones", opt.budget, "ones budget")
      ->required();
  prefix_cmd->add_flag("--thresholds", opt.thresholds,
                       "also report the binding thresholds");

  CLI::App* kraft_cmd = app.add_subcommand(
      "kraft", "length-multiset feasibility check and construction");
  add_io(kraft_cmd);
  kraft_cmd->add_option("--lengths", opt.lengths,
                        "comma-separated codeword lengths");
  kraft_cmd->add_option("-D,--max-ones", opt.budget, "ones budget")
      ->required();
  kraft_cmd->add_flag("--construct", opt.construct,
                      "build the leftmost codebook when feasible");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run the solver cross-check suites");
  verify_cmd->add_option("--n-max", opt.n_max, "exhaustive sweep cap (<=12)");
  verify_cmd->add_option("--d-max", opt.d_max, "ones budget cap");
  verify_cmd->add_option("--trials", opt.trials, "randomized instances");
  verify_cmd->add_option("--seed", opt.seed, "RNG seed");
  verify_cmd->add_flag("--perturb", opt.perturb,
                       "test-only: corrupt one split entry");

  CLI::App* bench_cmd =
      app.add_subcommand("bench", "naive vs ky split-candidate counts");
  bench_cmd->add_option("--sizes", opt.sizes, "comma-separated n sweep");
  bench_cmd->add_option("-D,--max-ones", opt.budget, "ones budget")
      ->default_val(4);
  bench_cmd->add_option("--seed", opt.seed, "RNG seed");
  bench_cmd->add_option("--out", opt.out, "CSV output path");

  CLI::App* encode_cmd =
      app.add_subcommand("encode", "encode symbol labels to bits");
  encode_cmd->add_option("--book", opt.book_path, "codebook JSON")->required();
  encode_cmd->add_option("--input", opt.input, "message file ('-' = stdin)");
  encode_cmd->add_option("--out", opt.out, "bit string output path");

  CLI::App* decode_cmd =
      app.add_subcommand("decode", "decode bits to symbol labels");
  decode_cmd->add_option("--book", opt.book_path, "codebook JSON")->required();
  decode_cmd->add_option("--input", opt.input, "bit string file ('-' = stdin)");
  decode_cmd->add_option("--out", opt.out, "message output path");

  try {
    app.parse(argc, argv);
    if (alphabetic->parsed()) return run_code_command(opt, true);
    if (prefix_cmd->parsed()) return run_code_command(opt, false);
    if (kraft_cmd->parsed()) return run_kraft(opt);
    if (verify_cmd->parsed()) return run_verify(opt);
    if (bench_cmd->parsed()) return run_bench(opt);
    if (encode_cmd->parsed()) return run_encode(opt);
    if (decode_cmd->parsed()) return run_decode(opt);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
