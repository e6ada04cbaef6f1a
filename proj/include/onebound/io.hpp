#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "onebound/core.hpp"
#include "onebound/kraft.hpp"

namespace onebound::io {

/// Distribution text format: one weight per line, optionally
/// "label<TAB>weight". Decimal weights are scaled to integers by the
/// smallest power of ten clearing all fractional parts; when that scale
/// would pass 10^9 the loader falls back to float mode.
struct LoadedDistribution {
  Distribution dist;                 // valid in canonical (integer) mode
  bool float_mode = false;
  std::vector<double> real_weights;  // set in float mode
  std::vector<std::string> labels;
  int scale_pow10 = 0;
};

LoadedDistribution read_distribution(std::istream& in);
LoadedDistribution read_distribution_file(const std::string& path);

/// Comma-separated positive integers, e.g. "4,2,3,4,3,3,3".
std::vector<int> parse_lengths(const std::string& text);

nlohmann::json codebook_to_json(const CodeBook& book);
CodeBook codebook_from_json(const nlohmann::json& j);
std::string codebook_to_text(const CodeBook& book);

nlohmann::json feasibility_to_json(const kraft::Feasibility& report,
                                   int budget);
std::string feasibility_to_text(const kraft::Feasibility& report, int budget);

/// Message files hold whitespace-separated symbol labels.
std::vector<std::size_t> parse_message(const std::string& text,
                                       const CodeBook& book);
std::string format_message(const CodeBook& book,
                           const std::vector<std::size_t>& message);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace onebound::io
