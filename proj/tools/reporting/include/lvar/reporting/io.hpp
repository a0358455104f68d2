#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lvar/distribution.hpp"
#include "lvar/loss_profile.hpp"

namespace lvar::io {

// One number per line, optional "value" header. Blank lines are skipped.
std::vector<double> parse_csv(std::string_view text);

// {"type": "empirical", "samples": [...]}
// {"type": "dirac", "x": x}
// {"type": "uniform", "a": a, "b": b}
// {"type": "mixture", "lambda": l, "p": {...}, "q": {...}}
// {"type": "piecewise", "points": [[x, left, value], ...]}
Cdf distribution_from_json(const nlohmann::json& spec);

// {"type": "constant", "lambda": l}
// {"type": "step", "lambda_min": a, "lambda_max": b, "threshold": x}
// {"type": "piecewise", "points": [[x, left, value], ...], "tails": [l, r],
//  "orientation": "increasing" | "decreasing" | "constant"}
LossProfile profile_from_json(const nlohmann::json& spec);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

// 64-bit FNV-1a as 16 lowercase hex digits.
std::string digest(std::string_view bytes);

struct LoadedData {
  Cdf cdf;
  std::string path;
  std::string format;  // "csv" or "json"
  std::string digest;
};

// JSON when the path ends in .json, CSV otherwise.
LoadedData load_data(const std::string& path);

struct LoadedProfile {
  LossProfile profile;
  nlohmann::json spec;
};

LoadedProfile load_profile(const std::string& path);

// Shortest decimal text that reads back to the same double.
std::string format_double(double x);

}  // namespace lvar::io
