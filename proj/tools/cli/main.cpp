#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lvar/lvar.hpp"
#include "lvar/reporting/io.hpp"
#include "lvar/reporting/report.hpp"
#include "lvar/reporting/suites.hpp"
#include "lvar/reporting/svg.hpp"

namespace {

using nlohmann::json;
using lvar::ErrorKind;

enum Exit : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kInfeasible = 3,
  kBracket = 4,
  kIo = 5,
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::Parse:
      return kUsage;
    case ErrorKind::Infeasible:
      return kInfeasible;
    case ErrorKind::Bracket:
    case ErrorKind::DualRange:
      return kBracket;
    case ErrorKind::Io:
      return kIo;
  }
  return kInternal;
}

struct Options {
  std::string data;
  std::string profile;
  std::string measure = "lambda-var";
  std::optional<double> lambda;
  double rate = 1.0;
  std::string out;
  std::optional<double> tol;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::string suite;
  std::size_t functions = 200;
  double delta = 0.01;
};

double tolerance(const Options& o) {
  if (o.tol) return *o.tol;
  if (const char* env = std::getenv("LVAR_TOL")) {
    try {
      std::size_t used = 0;
      const double t = std::stod(env, &used);
      if (used == std::string(env).size() && t > 0.0) return t;
    } catch (const std::exception&) {
    }
    lvar::fail(ErrorKind::Parse, "LVAR_TOL must be a positive number");
  }
  return 1e-9;
}

void emit(const lvar::report::ReportDocument& doc, const std::string& out) {
  const std::string text = lvar::report::serialize(doc);
  if (out.empty()) {
    std::cout << text;
  } else {
    lvar::io::write_file(out, text);
  }
}

json data_echo(const lvar::io::LoadedData& d) {
  return {{"path", d.path}, {"format", d.format}, {"digest", d.digest}};
}

// The profile a measure stands for: the file for lambda-var, a constant for
// var and worst-case.
lvar::LossProfile profile_for(const Options& o, json& inputs) {
  if (o.measure == "lambda-var") {
    if (o.profile.empty()) lvar::fail(ErrorKind::InvalidArgument, "--profile is required for lambda-var");
    lvar::io::LoadedProfile loaded = lvar::io::load_profile(o.profile);
    inputs["profile"] = loaded.spec;
    return loaded.profile;
  }
  if (o.measure == "var") {
    if (!o.lambda) lvar::fail(ErrorKind::InvalidArgument, "--lambda is required for var");
    inputs["lambda"] = *o.lambda;
    lvar::require(*o.lambda > 0.0 && *o.lambda < 1.0, "--lambda must lie in (0, 1)");
    return lvar::constant_profile(*o.lambda);
  }
  if (o.measure == "worst-case") return lvar::constant_profile(0.0);
  lvar::fail(ErrorKind::InvalidArgument, "measure '" + o.measure + "' has no loss profile");
}

const char* finiteness_name(lvar::FinitenessCase c) {
  return c == lvar::FinitenessCase::Finite ? "finite" : "plus_infinity_tail_dominated";
}

int cmd_compute(const Options& o) {
  lvar::report::ReportDocument doc;
  doc.command = "compute";
  doc.measure = o.measure;
  const lvar::io::LoadedData data = lvar::io::load_data(o.data);
  doc.inputs["data"] = data_echo(data);
  if (o.measure == "lambda-var") {
    const lvar::LossProfile profile = profile_for(o, doc.inputs);
    const lvar::RiskReport r = lvar::lambda_var(data.cdf, profile);
    doc.value = r.value;
    doc.diagnostics.violation_point = r.violation_point;
    doc.diagnostics.finiteness_case = finiteness_name(r.finiteness_case);
  } else if (o.measure == "var") {
    profile_for(o, doc.inputs);
    doc.value = lvar::var(data.cdf, *o.lambda);
    doc.diagnostics.violation_point = lvar::quantile_right(data.cdf, *o.lambda);
    doc.diagnostics.finiteness_case = "finite";
  } else if (o.measure == "worst-case") {
    doc.value = lvar::worst_case(data.cdf);
    doc.diagnostics.violation_point = data.cdf.support_min();
    doc.diagnostics.finiteness_case = "finite";
  } else if (o.measure == "entropic") {
    doc.value = lvar::entropic(data.cdf);
  } else if (o.measure == "certainty-eq") {
    doc.inputs["rate"] = o.rate;
    doc.value = lvar::certainty_equivalent(data.cdf, lvar::exponential_utility(o.rate));
  } else {
    lvar::fail(ErrorKind::InvalidArgument, "unknown measure '" + o.measure + "'");
  }
  emit(doc, o.out);
  return kOk;
}

int cmd_duality(const Options& o) {
  lvar::report::ReportDocument doc;
  doc.command = "duality";
  doc.measure = o.measure;
  const double tol = tolerance(o);
  const lvar::io::LoadedData data = lvar::io::load_data(o.data);
  doc.inputs["data"] = data_echo(data);
  doc.inputs["tol"] = tol;
  lvar::RiskModel model;
  if (o.measure == "lambda-var") {
    model = lvar::lambda_var_model(profile_for(o, doc.inputs));
  } else if (o.measure == "var") {
    profile_for(o, doc.inputs);
    model = lvar::var_model(*o.lambda);
  } else if (o.measure == "worst-case") {
    model = lvar::worst_case_model();
  } else {
    lvar::fail(ErrorKind::InvalidArgument, "duality supports lambda-var, var and worst-case");
  }
  const lvar::LadderBound ladder =
      lvar::ladder_representation_bound(data.cdf, model, o.functions, o.delta, tol);
  const lvar::DualBoundReport& r = ladder.report;
  doc.value = r.phi_value;
  lvar::report::DualitySection d;
  d.phi_value = r.phi_value;
  d.best_lower_bound = r.best_lower_bound;
  d.gap = r.gap;
  d.functions = ladder.centers.size();
  d.delta = ladder.delta;
  d.argmax_index = r.argmax_function_index;
  if (r.argmax_function_index) {
    const double c = ladder.centers[*r.argmax_function_index];
    d.argmax_function = {{"type", "negated_uniform_cdf"}, {"a", c}, {"b", c + ladder.delta}};
  }
  doc.duality = d;
  emit(doc, o.out);
  return kOk;
}

int cmd_check(const Options& o) {
  lvar::report::ReportDocument doc;
  doc.command = "check";
  const double tol = tolerance(o);
  doc.inputs = {{"suite", o.suite}, {"trials", o.trials}, {"seed", o.seed}, {"tol", tol}};
  doc.suite = lvar::suites::run(o.suite, o.trials, o.seed, tol);
  emit(doc, o.out);
  return doc.suite->violations == 0 ? kOk : kInternal;
}

int cmd_plot(const Options& o) {
  lvar::report::ReportDocument doc;
  doc.command = "plot";
  doc.measure = o.measure;
  const lvar::io::LoadedData data = lvar::io::load_data(o.data);
  doc.inputs["data"] = data_echo(data);
  const lvar::LossProfile profile = profile_for(o, doc.inputs);
  const lvar::RiskReport r = lvar::lambda_var(data.cdf, profile);
  lvar::io::write_file(o.out, lvar::svg::render(data.cdf, profile, r.violation_point));
  doc.inputs["out"] = o.out;
  doc.value = r.value;
  doc.diagnostics.violation_point = r.violation_point;
  doc.diagnostics.finiteness_case = finiteness_name(r.finiteness_case);
  emit(doc, "");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lambda value-at-risk and related risk measures"};
  app.require_subcommand(1);
  Options o;

  const std::vector<std::string> measures{"lambda-var", "var", "worst-case", "entropic", "certainty-eq"};
  auto add_inputs = [&](CLI::App* cmd) {
    cmd->add_option("--data", o.data, "Losses as CSV (one value per line) or distribution JSON")->required();
    cmd->add_option("--profile", o.profile, "Loss profile JSON");
    cmd->add_option("--measure", o.measure, "Risk measure")->check(CLI::IsMember(measures));
    cmd->add_option("--lambda", o.lambda, "Level for var");
  };

  CLI::App* compute = app.add_subcommand("compute", "Compute a risk value");
  add_inputs(compute);
  compute->add_option("--rate", o.rate, "Rate of the exponential utility for certainty-eq");
  compute->add_option("--out", o.out, "Write the report here instead of stdout");

  CLI::App* duality = app.add_subcommand("duality", "Dual lower bound from a ladder of test functions");
  add_inputs(duality);
  duality->add_option("--functions", o.functions, "Number of test functions")->check(CLI::PositiveNumber);
  duality->add_option("--delta", o.delta, "Width of each test function")->check(CLI::PositiveNumber);
  duality->add_option("--tol", o.tol, "Bisection tolerance (default $LVAR_TOL or 1e-9)");
  duality->add_option("--out", o.out, "Write the report here instead of stdout");

  CLI::App* check = app.add_subcommand("check", "Run a property suite");
  check->add_option("--suite", o.suite, "Suite name")->required();
  check->add_option("--trials", o.trials, "Number of random trials");
  check->add_option("--seed", o.seed, "Random seed");
  check->add_option("--tol", o.tol, "Numerical tolerance (default $LVAR_TOL or 1e-9)");
  check->add_option("--out", o.out, "Write the report here instead of stdout");

  CLI::App* plot = app.add_subcommand("plot", "Plot F_P against Lambda as SVG");
  add_inputs(plot);
  plot->add_option("--out", o.out, "SVG output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, std::cerr, std::cerr);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*compute) return cmd_compute(o);
    if (*duality) return cmd_duality(o);
    if (*check) return cmd_check(o);
    if (*plot) return cmd_plot(o);
  } catch (const lvar::Error& e) {
    std::cerr << "lvar: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "lvar: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
