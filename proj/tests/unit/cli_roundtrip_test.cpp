#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "lvar/reporting/fixtures.hpp"
#include "lvar/reporting/io.hpp"
#include "lvar/risk.hpp"

namespace {

using namespace lvar;
using nlohmann::json;

struct Outcome {
  int code;
  std::string out;
};

Outcome run_cli(const std::string& args) {
  const std::string cmd = std::string(LVAR_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  Outcome o{-1, {}};
  if (pipe == nullptr) return o;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) o.out.append(buf, n);
  const int status = pclose(pipe);
  o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return o;
}

json profile_json(const LossProfile& l) {
  json points = json::array();
  for (const Breakpoint& b : l.function().breakpoints()) points.push_back({b.x, b.left, b.value});
  const char* orientation = l.orientation() == Orientation::Increasing   ? "increasing"
                            : l.orientation() == Orientation::Decreasing ? "decreasing"
                                                                         : "constant";
  return {{"type", "piecewise"},
          {"points", points},
          {"tails", {l.function().tail_left(), l.function().tail_right()}},
          {"orientation", orientation}};
}

TEST(CliRoundTrip, ValuesMatchLibraryBitForBit) {
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "lvar_cli_roundtrip";
  std::filesystem::create_directories(dir);
  const std::string csv = (dir / "data.csv").string();
  const std::string prof = (dir / "profile.json").string();
  fixtures::Rng rng(2024);
  const char* measures[] = {"lambda-var", "var", "worst-case", "entropic", "certainty-eq"};
  for (int trial = 0; trial < 100; ++trial) {
    const std::vector<double> xs = fixtures::random_samples(rng);
    std::string text = "value\n";
    for (double x : xs) text += io::format_double(x) + "\n";
    io::write_file(csv, text);
    const Cdf p = from_samples(xs);
    const std::string measure = measures[trial % 5];
    std::string args = "compute --data " + csv + " --measure " + measure;
    double expected = 0.0;
    if (measure == "lambda-var") {
      const LossProfile l = fixtures::random_profile(rng);
      io::write_file(prof, profile_json(l).dump());
      args += " --profile " + prof;
      expected = lambda_var(p, l).value.value();
    } else if (measure == "var") {
      const double lambda = rng.uniform(0.01, 0.99);
      args += " --lambda " + io::format_double(lambda);
      expected = var(p, lambda);
    } else if (measure == "worst-case") {
      expected = worst_case(p).value();
    } else if (measure == "entropic") {
      expected = entropic(p);
    } else {
      const double rate = rng.uniform(0.1, 2.0);
      args += " --rate " + io::format_double(rate);
      expected = certainty_equivalent(p, exponential_utility(rate));
    }
    const Outcome o = run_cli(args);
    ASSERT_EQ(o.code, 0) << args;
    const json report = json::parse(o.out);
    EXPECT_EQ(report.at("value").get<double>(), expected) << args;
  }
  std::filesystem::remove_all(dir);
}

}  // namespace
