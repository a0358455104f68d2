#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "lvar/extended_real.hpp"

namespace lvar::report {

struct Diagnostics {
  std::optional<double> violation_point;
  std::optional<std::string> finiteness_case;  // "finite" or "plus_infinity_tail_dominated"
};

struct DualitySection {
  ExtendedReal phi_value;
  double best_lower_bound = 0.0;  // may be -inf
  ExtendedReal gap;
  std::size_t functions = 0;
  double delta = 0.0;
  std::optional<std::size_t> argmax_index;
  nlohmann::json argmax_function;  // descriptor of the best test function, or null
};

struct SuiteSection {
  std::string name;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t violations = 0;
  double max_residual = 0.0;
  nlohmann::json details = nlohmann::json::object();
};

struct ReportDocument {
  std::string command;
  std::optional<std::string> measure;
  nlohmann::json inputs = nlohmann::json::object();
  std::optional<ExtendedReal> value;
  Diagnostics diagnostics;
  std::optional<DualitySection> duality;
  std::optional<SuiteSection> suite;
};

// Infinite values are written as the strings "+inf" and "-inf".
nlohmann::json to_json(const ReportDocument& doc);
ReportDocument from_json(const nlohmann::json& j);

// Pretty-printed JSON followed by a newline.
std::string serialize(const ReportDocument& doc);

nlohmann::json number_or_infinity(double x);
double number_from_json(const nlohmann::json& j);

}  // namespace lvar::report
