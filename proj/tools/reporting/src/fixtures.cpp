#include "lvar/reporting/fixtures.hpp"

#include <algorithm>
#include <functional>

namespace lvar::fixtures {

namespace {

std::vector<double> sorted_draws(Rng& rng, int n, double lo, double hi, bool dyadic) {
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) xs.push_back(dyadic ? rng.dyadic(lo, hi) : rng.uniform(lo, hi));
  std::sort(xs.begin(), xs.end());
  return xs;
}

std::vector<double> distinct_sorted_draws(Rng& rng, int n, double lo, double hi, bool dyadic) {
  std::vector<double> xs = sorted_draws(rng, n, lo, hi, dyadic);
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

}  // namespace

std::vector<double> random_samples(Rng& rng, const SampleSpec& spec) {
  const int n = rng.integer(1, spec.max_atoms);
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    // Occasional ties exercise the merge in from_samples.
    if (i > 0 && rng.coin(0.1)) {
      xs.push_back(xs[static_cast<std::size_t>(rng.integer(0, i - 1))]);
    } else {
      xs.push_back(spec.dyadic ? rng.dyadic(spec.lo, spec.hi) : rng.uniform(spec.lo, spec.hi));
    }
  }
  return xs;
}

Cdf random_empirical(Rng& rng, const SampleSpec& spec) { return from_samples(random_samples(rng, spec)); }

Cdf random_distribution(Rng& rng, const SampleSpec& spec) {
  const double draw = rng.uniform01();
  auto random_uniform = [&] {
    double a = rng.uniform(spec.lo, spec.hi);
    double b = rng.uniform(spec.lo, spec.hi);
    if (a > b) std::swap(a, b);
    if (b - a < 1e-3) b = a + 1e-3;
    return uniform(a, b);
  };
  if (draw < 0.5) return random_empirical(rng, spec);
  if (draw < 0.65) return random_uniform();
  return mixture(random_empirical(rng, spec), random_uniform(), rng.uniform(0.05, 0.95));
}

std::pair<Cdf, Cdf> random_dominated_pair(Rng& rng, const SampleSpec& spec) {
  if (rng.coin(0.6)) {
    std::vector<double> xs = random_samples(rng, spec);
    std::vector<double> lowered(xs);
    for (double& x : lowered) {
      if (!rng.coin(1.0 / 3.0)) x -= rng.uniform(0.0, 0.25 * (spec.hi - spec.lo));
    }
    return {from_samples(xs), from_samples(lowered)};
  }
  // Mixing P with a left shift of itself moves mass down.
  const Cdf p = random_distribution(rng, spec);
  const Cdf lower = translate(p, -rng.uniform(0.0, 0.25 * (spec.hi - spec.lo)));
  return {p, mixture(p, lower, rng.uniform(0.0, 1.0))};
}

LossProfile random_increasing_profile(Rng& rng, const ProfileSpec& spec) {
  const int k = rng.integer(1, spec.max_breakpoints);
  const std::vector<double> xs = distinct_sorted_draws(rng, k, spec.lo, spec.hi, spec.dyadic);
  const std::vector<double> levels =
      sorted_draws(rng, 2 * static_cast<int>(xs.size()) + 1, 0.0, spec.max_level, spec.dyadic);
  std::vector<Breakpoint> points;
  double prev = levels[0];
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double left = (i > 0 && spec.affine && rng.coin()) ? levels[2 * i] : prev;
    const double value = (rng.coin(0.7) || !spec.affine) ? levels[2 * i + 1] : left;
    points.push_back({xs[i], left, value});
    prev = value;
  }
  return piecewise_profile(std::move(points), {levels[0], prev}, Orientation::Increasing);
}

LossProfile random_decreasing_continuous_profile(Rng& rng, const ProfileSpec& spec) {
  const int k = rng.integer(1, spec.max_breakpoints);
  const std::vector<double> xs = distinct_sorted_draws(rng, k, spec.lo, spec.hi, spec.dyadic);
  std::vector<double> levels = sorted_draws(rng, static_cast<int>(xs.size()), 0.0, spec.max_level, spec.dyadic);
  std::reverse(levels.begin(), levels.end());
  std::vector<Breakpoint> points;
  for (std::size_t i = 0; i < xs.size(); ++i) points.push_back({xs[i], levels[i], levels[i]});
  return piecewise_profile(std::move(points), {levels.front(), levels.back()}, Orientation::Decreasing);
}

LossProfile random_profile(Rng& rng, const ProfileSpec& spec) {
  if (rng.coin(0.7)) return random_increasing_profile(rng, spec);
  if (rng.coin(0.5)) return random_decreasing_continuous_profile(rng, spec);
  // Decreasing with jumps.
  const int k = rng.integer(1, spec.max_breakpoints);
  const std::vector<double> xs = distinct_sorted_draws(rng, k, spec.lo, spec.hi, spec.dyadic);
  std::vector<double> levels =
      sorted_draws(rng, 2 * static_cast<int>(xs.size()) + 1, 0.0, spec.max_level, spec.dyadic);
  std::reverse(levels.begin(), levels.end());
  std::vector<Breakpoint> points;
  double prev = levels[0];
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double left = (i > 0 && rng.coin()) ? levels[2 * i] : prev;
    points.push_back({xs[i], left, levels[2 * i + 1]});
    prev = levels[2 * i + 1];
  }
  return piecewise_profile(std::move(points), {levels[0], prev}, Orientation::Decreasing);
}

TestFunction random_test_function(Rng& rng, const TestFunctionSpec& spec) {
  const int k = rng.integer(2, std::max(2, spec.max_nodes));
  const std::vector<double> xs = distinct_sorted_draws(rng, k, spec.lo, spec.hi, false);
  std::vector<double> ys = sorted_draws(rng, static_cast<int>(xs.size()), -spec.range, spec.range, false);
  std::sort(ys.begin(), ys.end(), std::greater<>());
  // A flat stretch now and then.
  if (ys.size() > 2 && rng.coin(0.2)) ys[1] = ys[0];
  std::vector<std::pair<double, double>> nodes;
  for (std::size_t i = 0; i < xs.size(); ++i) nodes.emplace_back(xs[i], ys[i]);
  return TestFunction::through(nodes);
}

}  // namespace lvar::fixtures
