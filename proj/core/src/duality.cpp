#include "lvar/duality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lvar/error.hpp"
#include "lvar/risk.hpp"

namespace lvar {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double abscissa_reach(const PiecewiseLinear& f) {
  double reach = 0.0;
  for (const Breakpoint& b : f.breakpoints()) reach = std::max(reach, std::abs(b.x));
  return reach;
}

PiecewiseLinear one_minus(const LossProfile& profile) {
  const PiecewiseLinear& l = profile.function();
  return combine(l, l, [](double u, double) { return 1.0 - u; });
}

void require_increasing_feasible(const LossProfile& profile) {
  if (!profile.increasing()) fail(ErrorKind::InvalidArgument, "closed form requires an increasing Lambda");
  if (!is_feasible(profile)) fail(ErrorKind::Infeasible, "sup Lambda >= 1: Phi would be -inf");
}

// inf{s : H(s) <= y} for H(s) = int_{(-inf, s]} (1 - Lambda) df, which is
// continuous, nonincreasing and strictly decreasing wherever f is.
double h_left_inverse(const TestFunction& f, const LossProfile& profile, double y) {
  if (y >= 0.0) return -kInf;  // H vanishes left of every breakpoint
  const PiecewiseLinear& fl = f.function();
  const PiecewiseLinear& l = profile.function();
  const PiecewiseLinear g = one_minus(profile);
  double h = 0.0;
  bool have_prev = false;
  double prev = 0.0;
  for (double s : merged_abscissae(fl, l)) {
    if (have_prev) {
      const double rise = fl.left_limit(s) - fl(prev);
      const double h_next = h + rise * (0.5 * (g(prev) + g.left_limit(s)));
      if (h_next <= y) {
        if (h_next == y) return s;
        // On (prev, s): H = h + slope * [(1 - La) d - k d^2 / 2], d = x - prev.
        const double width = s - prev;
        const double slope = rise / width;
        const double one_minus_la = 1.0 - l(prev);
        const double k = (l.left_limit(s) - l(prev)) / width;
        const double r = (y - h) / slope;
        const double disc = std::max(0.0, one_minus_la * one_minus_la - 2.0 * k * r);
        const double d = 2.0 * r / (one_minus_la + std::sqrt(disc));
        return std::clamp(prev + d, prev, s);
      }
      h = h_next;
    }
    have_prev = true;
    prev = s;
  }
  return prev;
}

}  // namespace

TestFunction::TestFunction(PiecewiseLinear f) : f_(std::move(f)) {
  require(f_.continuous(), "test function must be continuous");
  require(f_.nonincreasing(), "test function must be nonincreasing");
}

TestFunction TestFunction::through(std::span<const std::pair<double, double>> nodes) {
  require(!nodes.empty(), "test function needs at least one node");
  std::vector<Breakpoint> points;
  points.reserve(nodes.size());
  for (const auto& [x, y] : nodes) points.push_back({x, y, y});
  return TestFunction(PiecewiseLinear(std::move(points), nodes.front().second, nodes.back().second));
}

TestFunction from_cdf_negated(const Cdf& q) {
  if (q.has_atoms()) fail(ErrorKind::InvalidArgument, "requires continuous distribution");
  std::vector<Breakpoint> points;
  for (const Breakpoint& b : q.function().breakpoints()) points.push_back({b.x, -b.left, -b.value});
  return TestFunction(PiecewiseLinear(std::move(points), -0.0, -1.0));
}

double left_inverse(const TestFunction& f, double y) {
  if (!(y >= f.limit_right() && y <= f.limit_left())) {
    fail(ErrorKind::DualRange, "outside range of f");
  }
  if (y == f.limit_left()) return -kInf;
  const auto pts = f.function().breakpoints();
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i].value <= y) {
      return level_crossing({pts[i - 1].x, pts[i - 1].value, pts[i].x, pts[i].left}, y);
    }
  }
  return pts.back().x;  // unreachable: the last value is f(+inf) <= y
}

double expectation(const TestFunction& f, const Cdf& q) {
  // Masses summing past 1 by an ulp must not push the mean out of f's range.
  return std::clamp(stieltjes(f.function(), q.function(), -kInf, kInf), f.limit_right(), f.limit_left());
}

double gamma_family(double m, const TestFunction& f, const AcceptanceFamily& family) {
  const PiecewiseLinear member = family.member(-m);
  if (!member.nondecreasing()) {
    fail(ErrorKind::InvalidArgument, "gamma closed form requires nondecreasing family members");
  }
  return stieltjes(f.function(), member, -kInf, kInf) + member.tail_left() * f.limit_left();
}

double gamma_lambda(double m, const TestFunction& f, const LossProfile& profile) {
  require_increasing_feasible(profile);
  return f.limit_left() + stieltjes(one_minus(profile), f.function(), -kInf, -m);
}

double gamma_decreasing(double m, const TestFunction& f, const LossProfile& profile) {
  if (!profile.decreasing() || !profile.function().continuous()) {
    fail(ErrorKind::InvalidArgument, "closed form requires a continuous decreasing Lambda");
  }
  const double level = profile(-m);
  // Written around f(-inf) so that a flat f gives f(-inf) exactly.
  return f.limit_left() + (1.0 - level) * (f(-m) - f.limit_left());
}

double gamma_bruteforce(double m, const TestFunction& f, const RiskFunctional& risk,
                        std::span<const Cdf> candidates) {
  require(!candidates.empty(), "candidate set must not be empty");
  double best = -kInf;
  bool any = false;
  for (const Cdf& q : candidates) {
    if (risk(q) <= ExtendedReal(m)) {
      best = std::max(best, expectation(f, q));
      any = true;
    }
  }
  if (!any) fail(ErrorKind::DualRange, "no feasible candidate");
  return best;
}

std::vector<Cdf> truncation_sequence(const PiecewiseLinear& member, int n_max) {
  std::vector<Cdf> out;
  out.reserve(static_cast<std::size_t>(std::max(n_max, 0)));
  for (int n = 1; n <= n_max; ++n) out.push_back(left_truncate(member, -static_cast<double>(n)));
  return out;
}

ExtendedReal r_minus(double t, const TestFunction& f, const LossProfile& profile) {
  require_increasing_feasible(profile);
  const double y = t - f.limit_left();
  const double h_total = stieltjes(one_minus(profile), f.function(), -kInf, kInf);
  if (!(y <= 0.0 && y >= h_total)) fail(ErrorKind::DualRange, "dual variable out of range");
  const double s = h_left_inverse(f, profile, y);
  if (s == -kInf) return ExtendedReal::plus_infinity();
  return -s;
}

DualSearch default_dual_search(const TestFunction& f, double model_scale, double tol) {
  const double reach = 1.0 + std::max(model_scale, abscissa_reach(f.function()));
  return {-10.0 * reach, 10.0 * reach, tol};
}

ExtendedReal r_minus_from_gamma(double t, const GammaFunction& gamma, const DualSearch& search) {
  require(search.m_lo < search.m_hi && search.tol > 0.0, "invalid dual search bracket");
  double lo = search.m_lo;
  double hi = search.m_hi;
  if (gamma(lo) >= t) fail(ErrorKind::DualRange, "gamma reaches t at the lower end of the bracket");
  if (gamma(hi) < t) return ExtendedReal::plus_infinity();
  while (hi - lo > search.tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (gamma(mid) >= t) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return lo;
}

ExtendedReal r_direct(double t, const TestFunction& f, const RiskFunctional& risk,
                      std::span<const Cdf> candidates) {
  ExtendedReal best = ExtendedReal::plus_infinity();
  for (const Cdf& q : candidates) {
    if (expectation(f, q) >= t) best = std::min(best, risk(q));
  }
  return best;
}

RiskModel lambda_var_model(const LossProfile& profile) {
  if (!is_feasible(profile)) fail(ErrorKind::Infeasible, "sup Lambda >= 1: Phi would be -inf");
  RiskModel model;
  model.name = "lambda-var";
  model.phi = [profile](const Cdf& p) { return lambda_var(p, profile).value; };
  if (profile.increasing()) {
    model.gamma = [profile](double m, const TestFunction& f) { return gamma_lambda(m, f, profile); };
  } else if (profile.function().continuous()) {
    model.gamma = [profile](double m, const TestFunction& f) {
      return gamma_decreasing(m, f, profile);
    };
  } else {
    fail(ErrorKind::InvalidArgument, "dual function needs an increasing or continuous Lambda");
  }
  model.scale = abscissa_reach(profile.function());
  return model;
}

RiskModel var_model(double lambda) {
  require(lambda > 0.0 && lambda < 1.0, "V@R level must lie in (0, 1)");
  RiskModel model = lambda_var_model(constant_profile(lambda));
  model.name = "var";
  return model;
}

RiskModel worst_case_model() {
  RiskModel model = lambda_var_model(constant_profile(0.0));
  model.name = "worst-case";
  return model;
}

DualBoundReport representation_bound(const Cdf& p, const RiskModel& model,
                                     std::span<const TestFunction> fs, double tol) {
  require(!fs.empty(), "need at least one test function");
  DualBoundReport report{model.phi(p), -kInf, ExtendedReal::plus_infinity(), std::nullopt};
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const TestFunction& f = fs[i];
    const double t = expectation(f, p);
    ExtendedReal bound;
    try {
      bound = r_minus_from_gamma(t, [&](double m) { return model.gamma(m, f); },
                                 default_dual_search(f, model.scale, tol));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DualRange) throw;
      continue;  // R^- = -inf: no information
    }
    if (bound.value() > report.best_lower_bound) {
      report.best_lower_bound = bound.value();
      report.argmax_function_index = i;
    }
  }
  if (report.phi_value.is_finite() && report.best_lower_bound > -kInf) {
    if (report.best_lower_bound == kInf) fail(ErrorKind::DualRange, "dual bound is +inf at finite risk");
    report.gap = report.phi_value.value() - report.best_lower_bound;
  }
  return report;
}

LadderBound ladder_representation_bound(const Cdf& p, const RiskModel& model,
                                        std::size_t n_functions, double delta, double tol) {
  require(n_functions >= 1 && delta > 0.0, "ladder needs at least one function and delta > 0");
  const std::size_t coarse = std::max<std::size_t>(1, n_functions / 2);
  const std::size_t fine = n_functions - coarse;
  const double lo = p.support_min() - delta;
  const double hi = p.support_max();
  auto grid = [](double a, double b, std::size_t n) {
    std::vector<double> out;
    if (n == 1) return std::vector<double>{0.5 * (a + b)};
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
    }
    return out;
  };
  auto functions_for = [delta](std::span<const double> centers) {
    std::vector<TestFunction> fs;
    fs.reserve(centers.size());
    for (double c : centers) fs.push_back(from_cdf_negated(uniform(c, c + delta)));
    return fs;
  };

  LadderBound out;
  out.delta = delta;
  out.centers = grid(lo, hi, coarse);
  if (fine > 0) {
    const DualBoundReport first = representation_bound(p, model, functions_for(out.centers), tol);
    const double spacing = coarse > 1 ? (hi - lo) / static_cast<double>(coarse - 1) : hi - lo;
    const double best = first.argmax_function_index ? out.centers[*first.argmax_function_index]
                                                    : 0.5 * (lo + hi);
    for (double c : grid(best - spacing, best + spacing, fine)) out.centers.push_back(c);
  }
  out.report = representation_bound(p, model, functions_for(out.centers), tol);
  return out;
}

double conjugate_divergence_witness(const RiskFunctional& risk, const TestFunction& f, int n_max) {
  require(n_max >= 1, "N must be at least 1");
  double best = -kInf;
  for (int n = 1; n <= n_max; ++n) {
    const auto x = static_cast<double>(n);
    const ExtendedReal r = risk(dirac(x));
    if (r.is_finite()) best = std::max(best, f(x) - r.value());
  }
  return best;
}

}  // namespace lvar
