#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "lvar/error.hpp"
#include "lvar/reporting/io.hpp"
#include "lvar/reporting/report.hpp"
#include "lvar/reporting/suites.hpp"
#include "lvar/reporting/svg.hpp"
#include "lvar/risk.hpp"

namespace {

using namespace lvar;
using nlohmann::json;

TEST(Csv, ParsesWithOptionalHeader) {
  EXPECT_EQ(io::parse_csv("value\n-10\n-5\n0\n5\n"), (std::vector<double>{-10.0, -5.0, 0.0, 5.0}));
  EXPECT_EQ(io::parse_csv("1.5\r\n\n+2\n"), (std::vector<double>{1.5, 2.0}));
  EXPECT_TRUE(io::parse_csv("").empty());
}

TEST(Csv, RejectsGarbage) {
  for (const char* bad : {"1\nabc\n", "1,2\n", "nan\n", "inf\n", "1e999\n", "value\nvalue\n"}) {
    try {
      io::parse_csv(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::Parse);
    }
  }
}

TEST(DistributionJson, AllTypes) {
  EXPECT_EQ(io::distribution_from_json(json::parse(R"({"type":"empirical","samples":[1,1,2]})")),
            from_samples(std::vector<double>{1.0, 1.0, 2.0}));
  EXPECT_EQ(io::distribution_from_json(json::parse(R"({"type":"dirac","x":3})")), dirac(3.0));
  EXPECT_EQ(io::distribution_from_json(json::parse(R"({"type":"uniform","a":-0.1,"b":0.9})")),
            uniform(-0.1, 0.9));
  EXPECT_EQ(io::distribution_from_json(json::parse(
                R"({"type":"mixture","lambda":0.5,"p":{"type":"dirac","x":0},"q":{"type":"dirac","x":1}})")),
            mixture(dirac(0.0), dirac(1.0), 0.5));
  EXPECT_EQ(io::distribution_from_json(json::parse(R"({"type":"piecewise","points":[[0,0,0],[1,1,1]]})")),
            uniform(0.0, 1.0));
  EXPECT_THROW(io::distribution_from_json(json::parse(R"({"type":"normal"})")), Error);
  EXPECT_THROW(io::distribution_from_json(json::parse(R"({"type":"dirac"})")), Error);
}

TEST(ProfileJson, AllTypes) {
  EXPECT_EQ(io::profile_from_json(json::parse(R"({"type":"constant","lambda":0.05})")), constant_profile(0.05));
  EXPECT_EQ(io::profile_from_json(
                json::parse(R"({"type":"step","lambda_min":0.1,"lambda_max":0.3,"threshold":0})")),
            step_profile(0.1, 0.3, 0.0));
  EXPECT_EQ(io::profile_from_json(json::parse(
                R"({"type":"piecewise","points":[[0,0.1,0.3]],"tails":[0.1,0.3],"orientation":"increasing"})")),
            step_profile(0.1, 0.3, 0.0));
  try {
    io::profile_from_json(json::parse(R"({"type":"constant","lambda":1.0})"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Infeasible);
  }
  EXPECT_THROW(io::profile_from_json(json::parse(R"({"type":"piecewise","points":[],"tails":[0,0]})")), Error);
}

TEST(Digest, Fnv1a) {
  EXPECT_EQ(io::digest(""), "cbf29ce484222325");
  EXPECT_EQ(io::digest("a"), "af63dc4c8601ec8c");
}

TEST(FormatDouble, RoundTrips) {
  for (double x : {0.1, -0.19999999999999998, 1e-300, 123456789.125, 5.0}) {
    EXPECT_EQ(std::stod(io::format_double(x)), x);
  }
}

report::ReportDocument full_document() {
  report::ReportDocument doc;
  doc.command = "duality";
  doc.measure = "var";
  doc.inputs = {{"lambda", 0.25}};
  doc.value = ExtendedReal(0.1 + 0.2);
  doc.diagnostics.violation_point = -0.30000000000000004;
  doc.diagnostics.finiteness_case = "finite";
  report::DualitySection d;
  d.phi_value = ExtendedReal(0.3);
  d.best_lower_bound = -std::numeric_limits<double>::infinity();
  d.gap = ExtendedReal::plus_infinity();
  d.functions = 200;
  d.delta = 0.01;
  doc.duality = d;
  report::SuiteSection s;
  s.name = "mon";
  s.trials = 10;
  s.seed = 7;
  s.max_residual = 1e-17;
  s.details = {{"skipped", 0}};
  doc.suite = s;
  return doc;
}

TEST(Report, RoundTripsLosslessly) {
  const report::ReportDocument doc = full_document();
  const std::string text = report::serialize(doc);
  const report::ReportDocument back = report::from_json(json::parse(text));
  EXPECT_EQ(report::serialize(back), text);
  EXPECT_EQ(back.value, doc.value);
  EXPECT_EQ(back.duality->gap, ExtendedReal::plus_infinity());
  EXPECT_EQ(back.duality->best_lower_bound, -std::numeric_limits<double>::infinity());
  EXPECT_EQ(*back.diagnostics.violation_point, -0.30000000000000004);
}

TEST(Report, InfinityIsAString) {
  report::ReportDocument doc;
  doc.command = "compute";
  doc.value = ExtendedReal::plus_infinity();
  const json j = report::to_json(doc);
  EXPECT_EQ(j.at("value"), "+inf");
  EXPECT_THROW(report::from_json(json::parse(R"({"command":"x","inputs":{},"diagnostics":{},"value":"-inf"})")),
               Error);
}

TEST(Svg, MarkerAtViolationPoint) {
  const Cdf p = uniform(-0.1, 0.9);
  const LossProfile l = step_profile(0.1, 0.3, 0.0);
  const RiskReport r = lambda_var(p, l);
  const std::string svg = svg::render(p, l, r.violation_point);
  EXPECT_NE(svg.find("viewBox=\"0 0 800 600\""), std::string::npos);
  EXPECT_NE(svg.find("class=\"violation-marker\" data-x=\"0.19999999999999998\""), std::string::npos);
  EXPECT_NE(svg.find("class=\"cdf\""), std::string::npos);
  EXPECT_NE(svg.find("class=\"profile\""), std::string::npos);
  EXPECT_NE(svg.find("outcome x"), std::string::npos);
  const std::string d = svg::render(dirac(2.0), constant_profile(0.3), 2.0);
  EXPECT_NE(d.find("data-x=\"2\""), std::string::npos);
}

TEST(Suites, DeterministicAndClean) {
  for (const std::string& name : suites::names()) {
    const report::SuiteSection a = suites::run(name, 200, 7);
    const report::SuiteSection b = suites::run(name, 200, 7);
    report::ReportDocument da;
    da.command = "check";
    da.suite = a;
    report::ReportDocument db = da;
    db.suite = b;
    EXPECT_EQ(report::serialize(da), report::serialize(db)) << name;
    EXPECT_EQ(a.violations, 0u) << name;
  }
  EXPECT_THROW(suites::run("nope", 1, 0), Error);
}

TEST(Suites, CounterexampleReportsProfileJump) {
  const report::SuiteSection s = suites::run("cfb-counterexample", 1, 0);
  EXPECT_NEAR(s.details.at("discontinuity").get<double>(), 0.2, 1e-12);
  EXPECT_DOUBLE_EQ(s.details.at("profile_jump").get<double>(), 0.3 - 0.1);
}

}  // namespace
