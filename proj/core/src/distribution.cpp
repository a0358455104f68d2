#include "lvar/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lvar/error.hpp"

namespace lvar {

Cdf::Cdf(PiecewiseLinear f) : f_(std::move(f)) {
  require(f_.tail_left() == 0.0 && f_.tail_right() == 1.0,
          "a distribution function has limits 0 and 1");
  require(f_.nondecreasing(), "a distribution function is nondecreasing");
}

double Cdf::support_min() const {
  const auto pts = f_.breakpoints();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].value > 0.0) {
      if (i > 0 && pts[i].left > 0.0) return pts[i - 1].x;
      return pts[i].x;
    }
  }
  return pts.front().x;  // unreachable: the last value is 1
}

double Cdf::support_max() const {
  const auto pts = f_.breakpoints();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].value == 1.0) return pts[i].x;
  }
  return pts.back().x;
}

Cdf dirac(double x) {
  require(std::isfinite(x), "dirac location must be finite");
  return Cdf(PiecewiseLinear({{x, 0.0, 1.0}}, 0.0, 1.0));
}

Cdf uniform(double a, double b) {
  require(std::isfinite(a) && std::isfinite(b) && a < b, "uniform(a, b) requires a < b");
  return Cdf(PiecewiseLinear({{a, 0.0, 0.0}, {b, 1.0, 1.0}}, 0.0, 1.0));
}

Cdf from_samples(std::span<const double> samples) {
  if (samples.empty()) fail(ErrorKind::InvalidArgument, "no data");
  std::vector<double> xs(samples.begin(), samples.end());
  for (double x : xs) require(std::isfinite(x), "samples must be finite");
  std::sort(xs.begin(), xs.end());
  const auto n = static_cast<double>(xs.size());
  std::vector<Breakpoint> points;
  std::size_t below = 0;
  for (std::size_t i = 0; i < xs.size();) {
    std::size_t j = i;
    while (j < xs.size() && xs[j] == xs[i]) ++j;
    points.push_back({xs[i], static_cast<double>(below) / n, static_cast<double>(j) / n});
    below = j;
    i = j;
  }
  return Cdf(PiecewiseLinear(std::move(points), 0.0, 1.0));
}

Cdf mixture(const Cdf& p, const Cdf& q, double lambda) {
  require(lambda >= 0.0 && lambda <= 1.0, "mixture weight must lie in [0, 1]");
  // Where both agree the mixture is that value; this keeps the tails exact.
  auto mix = [lambda](double u, double v) { return u == v ? u : lambda * u + (1.0 - lambda) * v; };
  PiecewiseLinear f = combine(p.function(), q.function(), mix);
  // Rounding may break monotonicity by an ulp between nearly equal values.
  std::vector<Breakpoint> points(f.breakpoints().begin(), f.breakpoints().end());
  double running = 0.0;
  for (Breakpoint& b : points) {
    b.left = std::clamp(b.left, running, 1.0);
    b.value = std::clamp(b.value, b.left, 1.0);
    running = b.value;
  }
  return Cdf(PiecewiseLinear(std::move(points), 0.0, 1.0));
}

Cdf translate(const Cdf& p, double m) {
  require(std::isfinite(m), "translation must be finite");
  return Cdf(p.function().translated(m));
}

Cdf left_truncate(const PiecewiseLinear& f, double at) {
  std::vector<Breakpoint> points{{at, 0.0, f(at)}};
  for (const Breakpoint& b : f.breakpoints()) {
    if (b.x > at) points.push_back(b);
  }
  return Cdf(PiecewiseLinear(std::move(points), 0.0, f.tail_right()));
}

double quantile_right(const Cdf& p, double lambda) {
  require(lambda > 0.0 && lambda < 1.0, "quantile level must lie in (0, 1)");
  const auto pts = p.function().breakpoints();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].value <= lambda) continue;
    if (i > 0 && pts[i].left > lambda) {
      return level_crossing({pts[i - 1].x, pts[i - 1].value, pts[i].x, pts[i].left}, lambda);
    }
    return pts[i].x;
  }
  return pts.back().x;  // unreachable: the last value is 1
}

bool dominates(const Cdf& p, const Cdf& q) { return pointwise_le(p.function(), q.function()); }

bool converges_weakly(std::span<const Cdf> sequence, const Cdf& limit,
                      std::span<const double> probes, const WeakConvergenceOptions& options) {
  for (double x : probes) {
    if (limit.has_jump_at(x)) {
      fail(ErrorKind::InvalidArgument, "probe not a continuity point: " + std::to_string(x));
    }
  }
  if (sequence.empty()) return false;
  const std::size_t n = sequence.size();
  const auto tail_start = static_cast<std::size_t>(
      std::floor(static_cast<double>(n) * (1.0 - std::clamp(options.tail_fraction, 0.0, 1.0))));
  for (double x : probes) {
    const double target = limit(x);
    double previous = std::abs(sequence[std::min(tail_start, n - 1)](x) - target);
    for (std::size_t i = tail_start + 1; i < n; ++i) {
      const double err = std::abs(sequence[i](x) - target);
      if (err > previous) return false;
      previous = err;
    }
    if (previous > options.tolerance) return false;
  }
  return true;
}

}  // namespace lvar
