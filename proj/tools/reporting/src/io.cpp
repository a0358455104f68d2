#include "lvar/reporting/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "lvar/error.hpp"

namespace lvar::io {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view token, std::size_t line) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), x);
  if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(x)) {
    fail(ErrorKind::Parse, "line " + std::to_string(line) + ": not a finite number: '" +
                               std::string(token) + "'");
  }
  return x;
}

double number_field(const json& spec, const char* key) {
  if (!spec.contains(key) || !spec.at(key).is_number()) {
    fail(ErrorKind::Parse, std::string("missing numeric field '") + key + "'");
  }
  return spec.at(key).get<double>();
}

std::vector<Breakpoint> points_field(const json& spec) {
  if (!spec.contains("points") || !spec.at("points").is_array()) {
    fail(ErrorKind::Parse, "missing array field 'points'");
  }
  std::vector<Breakpoint> points;
  for (const json& p : spec.at("points")) {
    if (!p.is_array() || p.size() != 3 || !p[0].is_number() || !p[1].is_number() || !p[2].is_number()) {
      fail(ErrorKind::Parse, "each point must be [x, left, value]");
    }
    points.push_back({p[0].get<double>(), p[1].get<double>(), p[2].get<double>()});
  }
  return points;
}

std::string type_field(const json& spec) {
  if (!spec.is_object() || !spec.contains("type") || !spec.at("type").is_string()) {
    fail(ErrorKind::Parse, "expected an object with a string field 'type'");
  }
  return spec.at("type").get<std::string>();
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

json parse_json(const std::string& text, const std::string& path) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, path + ": " + e.what());
  }
}

}  // namespace

std::vector<double> parse_csv(std::string_view text) {
  std::vector<double> values;
  std::size_t line_no = 0;
  bool first_content = true;
  while (!text.empty()) {
    const auto end = text.find('\n');
    const std::string_view line = trim(text.substr(0, end));
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    ++line_no;
    if (line.empty()) continue;
    if (first_content && line == "value") {
      first_content = false;
      continue;
    }
    first_content = false;
    values.push_back(parse_number(line, line_no));
  }
  return values;
}

Cdf distribution_from_json(const json& spec) {
  const std::string type = type_field(spec);
  if (type == "empirical") {
    if (!spec.contains("samples") || !spec.at("samples").is_array()) {
      fail(ErrorKind::Parse, "missing array field 'samples'");
    }
    std::vector<double> xs;
    for (const json& v : spec.at("samples")) {
      if (!v.is_number()) fail(ErrorKind::Parse, "samples must be numbers");
      xs.push_back(v.get<double>());
    }
    return from_samples(xs);
  }
  if (type == "dirac") return dirac(number_field(spec, "x"));
  if (type == "uniform") return uniform(number_field(spec, "a"), number_field(spec, "b"));
  if (type == "mixture") {
    if (!spec.contains("p") || !spec.contains("q")) fail(ErrorKind::Parse, "mixture needs 'p' and 'q'");
    return mixture(distribution_from_json(spec.at("p")), distribution_from_json(spec.at("q")),
                   number_field(spec, "lambda"));
  }
  if (type == "piecewise") return Cdf(PiecewiseLinear(points_field(spec), 0.0, 1.0));
  fail(ErrorKind::Parse, "unknown distribution type '" + type + "'");
}

LossProfile profile_from_json(const json& spec) {
  const std::string type = type_field(spec);
  if (type == "constant") return constant_profile(number_field(spec, "lambda"));
  if (type == "step") {
    return step_profile(number_field(spec, "lambda_min"), number_field(spec, "lambda_max"),
                        number_field(spec, "threshold"));
  }
  if (type == "piecewise") {
    const json& tails = spec.value("tails", json());
    if (!tails.is_array() || tails.size() != 2 || !tails[0].is_number() || !tails[1].is_number()) {
      fail(ErrorKind::Parse, "piecewise profile needs 'tails': [left, right]");
    }
    const std::string o = spec.value("orientation", std::string());
    Orientation orientation;
    if (o == "increasing") {
      orientation = Orientation::Increasing;
    } else if (o == "decreasing") {
      orientation = Orientation::Decreasing;
    } else if (o == "constant") {
      orientation = Orientation::Constant;
    } else {
      fail(ErrorKind::Parse, "orientation must be increasing, decreasing or constant");
    }
    return piecewise_profile(points_field(spec), {tails[0].get<double>(), tails[1].get<double>()},
                             orientation);
  }
  fail(ErrorKind::Parse, "unknown profile type '" + type + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Io, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::Io, "cannot write " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) fail(ErrorKind::Io, "write failed: " + path);
}

std::string digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = kHex[h & 0xf];
  return out;
}

LoadedData load_data(const std::string& path) {
  const std::string text = read_file(path);
  if (ends_with(path, ".json")) {
    return {distribution_from_json(parse_json(text, path)), path, "json", digest(text)};
  }
  const std::vector<double> samples = parse_csv(text);
  if (samples.empty()) fail(ErrorKind::Parse, path + ": no data");
  return {from_samples(samples), path, "csv", digest(text)};
}

LoadedProfile load_profile(const std::string& path) {
  json spec = parse_json(read_file(path), path);
  LossProfile profile = profile_from_json(spec);
  return {std::move(profile), std::move(spec)};
}

std::string format_double(double x) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

}  // namespace lvar::io
