#include "onebound/io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace onebound::io {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

struct ExactWeight {
  bool ok = false;        // token is a plain integer/decimal literal
  bool negative = false;
  unsigned __int128 digits = 0;  // all digits, fraction appended
  int decimals = 0;              // fractional digits after zero-stripping
};

ExactWeight parse_exact(const std::string& token) {
  ExactWeight out;
  std::size_t at = 0;
  if (at < token.size() && (token[at] == '+' || token[at] == '-')) {
    out.negative = token[at] == '-';
    ++at;
  }
  std::string integral, fraction;
  while (at < token.size() && std::isdigit(static_cast<unsigned char>(token[at]))) {
    integral += token[at++];
  }
  if (at < token.size() && token[at] == '.') {
    ++at;
    while (at < token.size() &&
           std::isdigit(static_cast<unsigned char>(token[at]))) {
      fraction += token[at++];
    }
  }
  if (at != token.size() || (integral.empty() && fraction.empty())) return out;
  while (!fraction.empty() && fraction.back() == '0') fraction.pop_back();
  const std::string all = integral + fraction;
  if (all.size() > 27) return out;  // let the float path handle extremes
  for (char c : all) out.digits = out.digits * 10 + (c - '0');
  out.decimals = static_cast<int>(fraction.size());
  out.ok = true;
  return out;
}

}  // namespace

LoadedDistribution read_distribution(std::istream& in) {
  std::vector<std::string> labels;
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    std::string label, value = stripped;
    if (auto tab = stripped.find('\t'); tab != std::string::npos) {
      label = trim(stripped.substr(0, tab));
      value = trim(stripped.substr(tab + 1));
    }
    labels.push_back(label);
    tokens.push_back(value);
  }
  if (tokens.empty()) throw Error(Errc::empty_input, "no weights in input");

  bool any_label = false;
  for (const auto& l : labels) any_label |= !l.empty();
  if (!any_label) labels.clear();

  LoadedDistribution out;
  out.labels = labels;

  std::vector<ExactWeight> exact(tokens.size());
  bool all_exact = true;
  int scale = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    exact[i] = parse_exact(tokens[i]);
    all_exact &= exact[i].ok;
    if (exact[i].ok) scale = std::max(scale, exact[i].decimals);
  }

  if (all_exact && scale <= 9) {
    std::vector<Weight> weights;
    weights.reserve(tokens.size());
    bool fits = true;
    for (const auto& w : exact) {
      unsigned __int128 scaled = w.digits;
      for (int k = w.decimals; k < scale; ++k) scaled *= 10;
      if (scaled > static_cast<unsigned __int128>(
                       std::numeric_limits<Weight>::max())) {
        fits = false;
        break;
      }
      Weight value = static_cast<Weight>(scaled);
      weights.push_back(w.negative ? -value : value);
    }
    if (fits) {
      out.dist = validate_distribution(std::move(weights),
                                       any_label ? labels
                                                 : std::vector<std::string>{});
      out.scale_pow10 = scale;
      return out;
    }
  }

  // float mode
  out.float_mode = true;
  out.real_weights.reserve(tokens.size());
  bool any_positive = false;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    double value = 0;
    try {
      std::size_t used = 0;
      value = std::stod(tokens[i], &used);
      if (used != tokens[i].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(Errc::bad_format, "invalid weight '" + tokens[i] + "'");
    }
    if (std::isnan(value) || std::isinf(value)) {
      throw Error(Errc::bad_format, "weight '" + tokens[i] + "' is not finite");
    }
    if (value < 0) {
      throw Error(Errc::negative_weight,
                  "weight " + std::to_string(i + 1) + " is negative");
    }
    any_positive |= value > 0;
    out.real_weights.push_back(value);
  }
  if (!any_positive) throw Error(Errc::all_zero, "all weights are zero");
  return out;
}

LoadedDistribution read_distribution_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::bad_format, "cannot open '" + path + "'");
  return read_distribution(in);
}

std::vector<int> parse_lengths(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::string token = trim(item);
    if (token.empty()) continue;
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw Error(Errc::bad_format, "invalid length '" + token + "'");
    }
    if (used != token.size()) {
      throw Error(Errc::bad_format, "invalid length '" + token + "'");
    }
    if (value < 1) {
      throw Error(Errc::non_positive_length, "lengths must be >= 1");
    }
    out.push_back(value);
  }
  if (out.empty()) throw Error(Errc::empty_lengths, "no lengths given");
  return out;
}

nlohmann::json codebook_to_json(const CodeBook& book) {
  nlohmann::json j;
  j["mode"] = std::string(to_string(book.mode));
  j["D"] = book.ones_budget;
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : book.entries) {
    entries.push_back({{"symbol", e.symbol},
                       {"codeword", e.word},
                       {"length", e.word.size()},
                       {"ones", ones_count(e.word)}});
  }
  j["entries"] = std::move(entries);
  return j;
}

CodeBook codebook_from_json(const nlohmann::json& j) {
  CodeBook book;
  try {
    const std::string mode = j.value("mode", "prefix");
    book.mode = mode == "alphabetic" ? CodeMode::alphabetic : CodeMode::prefix;
    book.ones_budget = j.value("D", 0);
    for (const auto& e : j.at("entries")) {
      CodeEntry entry;
      entry.symbol = e.at("symbol").get<std::string>();
      entry.word = e.at("codeword").get<std::string>();
      for (char c : entry.word) {
        if (c != '0' && c != '1') {
          throw Error(Errc::bad_format,
                      "codeword '" + entry.word + "' has non-bit characters");
        }
      }
      book.entries.push_back(std::move(entry));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::bad_format, std::string("bad codebook JSON: ") + e.what());
  }
  return book;
}

std::string codebook_to_text(const CodeBook& book) {
  std::ostringstream os;
  os << "mode: " << to_string(book.mode) << "\n";
  os << "D: " << book.ones_budget << "\n";
  for (const auto& e : book.entries) {
    os << e.symbol << "\t" << e.word << "\t(length " << e.word.size()
       << ", ones " << ones_count(e.word) << ")\n";
  }
  return os.str();
}

namespace {

nlohmann::json kraft_to_json(const KraftSum& k) {
  nlohmann::json j;
  j["is_full"] = k.is_full;
  j["at_most_one"] = k.at_most_one;
  j["value"] = k.value;
  if (k.exact) {
    j["numerator"] = k.num;
    j["denominator"] = k.den;
  }
  return j;
}

}  // namespace

nlohmann::json feasibility_to_json(const kraft::Feasibility& report,
                                   int budget) {
  nlohmann::json j;
  j["verdict"] = std::string(kraft::to_string(report.verdict));
  j["D"] = budget;
  j["kraft_sum"] = kraft_to_json(report.kraft);
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& row : report.levels) {
    levels.push_back({{"level", row.level},
                      {"count", row.count},
                      {"capacity", row.capacity},
                      {"blocked_next", row.blocked},
                      {"bound", row.bound},
                      {"slack", row.slack},
                      {"ok", row.ok}});
  }
  j["levels"] = std::move(levels);
  return j;
}

std::string feasibility_to_text(const kraft::Feasibility& report, int budget) {
  std::ostringstream os;
  os << "verdict: " << kraft::to_string(report.verdict) << " (D=" << budget
     << ")\n";
  const auto& k = report.kraft;
  os << "kraft sum: ";
  if (k.exact) {
    os << k.num << "/" << k.den;
  } else {
    os << "~" << k.value;
  }
  os << (k.is_full ? " (full)" : "") << "\n";
  for (const auto& row : report.levels) {
    os << "level " << row.level << ": N=" << row.count << " bound=" << row.bound
       << " (capacity " << row.capacity << " - blocked " << row.blocked
       << ") slack=" << row.slack << (row.ok ? "" : " VIOLATED") << "\n";
  }
  return os.str();
}

std::vector<std::size_t> parse_message(const std::string& text,
                                       const CodeBook& book) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < book.size(); ++i) {
    index.emplace(book.entries[i].symbol, i);
  }
  std::vector<std::size_t> out;
  std::istringstream ss(text);
  std::string token;
  while (ss >> token) {
    auto it = index.find(token);
    if (it == index.end()) {
      throw Error(Errc::unknown_symbol, "unknown symbol '" + token + "'");
    }
    out.push_back(it->second);
  }
  return out;
}

std::string format_message(const CodeBook& book,
                           const std::vector<std::size_t>& message) {
  std::ostringstream os;
  for (std::size_t i = 0; i < message.size(); ++i) {
    if (message[i] >= book.size()) {
      throw Error(Errc::unknown_symbol,
                  "symbol index " + std::to_string(message[i]) +
                      " not in codebook");
    }
    if (i) os << ' ';
    os << book.entries[message[i]].symbol;
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::bad_format, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::bad_format, "cannot write '" + path + "'");
  out << content;
}

}  // namespace onebound::io
