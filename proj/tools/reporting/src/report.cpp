#include "lvar/reporting/report.hpp"

#include <cmath>
#include <limits>

#include "lvar/error.hpp"

namespace lvar::report {

using nlohmann::json;

json number_or_infinity(double x) {
  if (std::isinf(x)) return x > 0 ? "+inf" : "-inf";
  return x;
}

double number_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j == "+inf") return std::numeric_limits<double>::infinity();
  if (j == "-inf") return -std::numeric_limits<double>::infinity();
  fail(ErrorKind::Parse, "expected a number, \"+inf\" or \"-inf\"");
}

namespace {

json extended(const ExtendedReal& r) { return number_or_infinity(r.value()); }

ExtendedReal extended_from(const json& j) {
  const double x = number_from_json(j);
  if (x == -std::numeric_limits<double>::infinity()) fail(ErrorKind::Parse, "risk values are never -inf");
  return std::isinf(x) ? ExtendedReal::plus_infinity() : ExtendedReal(x);
}

}  // namespace

json to_json(const ReportDocument& doc) {
  json j;
  j["command"] = doc.command;
  if (doc.measure) j["measure"] = *doc.measure;
  j["inputs"] = doc.inputs;
  if (doc.value) j["value"] = extended(*doc.value);
  json diag = json::object();
  if (doc.diagnostics.violation_point) diag["violation_point"] = *doc.diagnostics.violation_point;
  if (doc.diagnostics.finiteness_case) diag["finiteness_case"] = *doc.diagnostics.finiteness_case;
  j["diagnostics"] = diag;
  if (doc.duality) {
    const DualitySection& d = *doc.duality;
    json dj;
    dj["phi_value"] = extended(d.phi_value);
    dj["best_lower_bound"] = number_or_infinity(d.best_lower_bound);
    dj["gap"] = extended(d.gap);
    dj["functions"] = d.functions;
    dj["delta"] = d.delta;
    dj["argmax_index"] = d.argmax_index ? json(*d.argmax_index) : json();
    dj["argmax_function"] = d.argmax_function;
    j["duality"] = dj;
  }
  if (doc.suite) {
    const SuiteSection& s = *doc.suite;
    j["suite"] = {{"name", s.name},           {"trials", s.trials},
                  {"seed", s.seed},           {"violations", s.violations},
                  {"max_residual", s.max_residual}, {"details", s.details}};
  }
  return j;
}

ReportDocument from_json(const json& j) {
  try {
    ReportDocument doc;
    doc.command = j.at("command").get<std::string>();
    if (j.contains("measure")) doc.measure = j.at("measure").get<std::string>();
    doc.inputs = j.at("inputs");
    if (j.contains("value")) doc.value = extended_from(j.at("value"));
    const json& diag = j.at("diagnostics");
    if (diag.contains("violation_point")) doc.diagnostics.violation_point = diag.at("violation_point").get<double>();
    if (diag.contains("finiteness_case")) doc.diagnostics.finiteness_case = diag.at("finiteness_case").get<std::string>();
    if (j.contains("duality")) {
      const json& dj = j.at("duality");
      DualitySection d;
      d.phi_value = extended_from(dj.at("phi_value"));
      d.best_lower_bound = number_from_json(dj.at("best_lower_bound"));
      d.gap = extended_from(dj.at("gap"));
      d.functions = dj.at("functions").get<std::size_t>();
      d.delta = dj.at("delta").get<double>();
      if (!dj.at("argmax_index").is_null()) d.argmax_index = dj.at("argmax_index").get<std::size_t>();
      d.argmax_function = dj.at("argmax_function");
      doc.duality = d;
    }
    if (j.contains("suite")) {
      const json& sj = j.at("suite");
      SuiteSection s;
      s.name = sj.at("name").get<std::string>();
      s.trials = sj.at("trials").get<std::uint64_t>();
      s.seed = sj.at("seed").get<std::uint64_t>();
      s.violations = sj.at("violations").get<std::uint64_t>();
      s.max_residual = sj.at("max_residual").get<double>();
      s.details = sj.at("details");
      doc.suite = s;
    }
    return doc;
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, std::string("malformed report: ") + e.what());
  }
}

std::string serialize(const ReportDocument& doc) { return to_json(doc).dump(2) + "\n"; }

}  // namespace lvar::report
