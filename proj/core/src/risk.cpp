#include "lvar/risk.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "lvar/error.hpp"

namespace lvar {

namespace {

void require_feasible(const LossProfile& profile) {
  if (!is_feasible(profile)) fail(ErrorKind::Infeasible, "sup Lambda >= 1: Phi would be -inf");
}

RiskReport report_from(const Exceedance& e) {
  switch (e.kind) {
    case Exceedance::Kind::At:
      return {ExtendedReal(-e.x), e.x, FinitenessCase::Finite};
    case Exceedance::Kind::MinusInfinity:
      return {ExtendedReal::plus_infinity(), std::nullopt, FinitenessCase::PlusInfinityTailDominated};
    case Exceedance::Kind::None:
      break;
  }
  // F_P tends to 1 while a feasible profile stays below 1.
  fail(ErrorKind::Infeasible, "no violation point: Phi would be -inf");
}

double integrate_against(const Cdf& p, const DecreasingFunction& f) {
  double total = 0.0;
  const auto pts = p.function().breakpoints();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].value != pts[i].left) total += f.value(pts[i].x) * (pts[i].value - pts[i].left);
    if (i + 1 == pts.size()) break;
    const double u = pts[i].x;
    const double v = pts[i + 1].x;
    const double rise = pts[i + 1].left - pts[i].value;
    if (rise == 0.0) continue;
    const double density = rise / (v - u);
    if (f.antiderivative) {
      total += density * (f.antiderivative(v) - f.antiderivative(u));
    } else {
      total += density * boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f.value, u, v);
    }
  }
  return total;
}

}  // namespace

RiskReport lambda_var(const Cdf& p, const LossProfile& profile) {
  require_feasible(profile);
  return report_from(first_exceedance(p.function(), profile.function()));
}

RiskReport lambda_var_tilde(const Cdf& p, const LossProfile& profile) {
  if (!profile.decreasing() || !profile.function().continuous()) {
    fail(ErrorKind::InvalidArgument, "tilde formulation requires a continuous decreasing Lambda");
  }
  require_feasible(profile);
  const PiecewiseLinear& F = p.function();
  const PiecewiseLinear& L = profile.function();
  // g(m) = F(m-) - Lambda(m) is nondecreasing and left-continuous; the
  // accepted levels are {g <= 0} = (-inf, m*].
  bool have_prev = false;
  double prev = 0.0;
  for (double x : merged_abscissae(F, L)) {
    if (have_prev) {
      const double g_end = F.left_limit(x) - L(x);
      if (g_end > 0.0) {
        const double g_start = F(prev) - L(prev);
        double m_star = prev;
        if (g_start <= 0.0) {
          const AffinePiece pf = F.piece_after(prev);
          const AffinePiece pl = L.piece_after(prev);
          if (pl.flat()) {
            m_star = level_crossing(pf, pl.v0);
          } else if (pf.flat()) {
            m_star = level_crossing(pl, pf.v0);
          } else {
            m_star = prev + (-g_start) / (g_end - g_start) * (x - prev);
          }
          m_star = std::clamp(m_star, prev, x);
        }
        return {ExtendedReal(-m_star), m_star, FinitenessCase::Finite};
      }
    }
    have_prev = true;
    prev = x;
  }
  // Past the last breakpoint g = 1 - Lambda(+inf) > 0.
  return {ExtendedReal(-prev), prev, FinitenessCase::Finite};
}

double var(const Cdf& p, double lambda) { return -quantile_right(p, lambda); }

ExtendedReal worst_case(const Cdf& p) { return -p.support_min(); }

DecreasingFunction exponential_utility(double rate) {
  require(rate > 0.0, "utility rate must be positive");
  return {[rate](double x) { return std::exp(-rate * x); },
          [rate](double x) { return -std::exp(-rate * x) / rate; }};
}

double certainty_equivalent(const Cdf& p, const DecreasingFunction& f) {
  const double integral = integrate_against(p, f);
  if (!std::isfinite(integral)) {
    fail(ErrorKind::InvalidArgument, "not invertible at integral value: integral is not finite");
  }
  double lo = p.support_min();
  double hi = p.support_max();
  if (f.value(lo) == integral) return -lo;
  if (f.value(hi) == integral) return -hi;
  // The integral is an average of f over the support, so f^{-1} of it lies in
  // the support hull up to rounding; widen geometrically if needed.
  double step = std::max(1.0, hi - lo);
  for (int k = 0; k < 64 && !(f.value(lo) >= integral); ++k, step *= 2.0) lo -= step;
  step = std::max(1.0, hi - lo);
  for (int k = 0; k < 64 && !(f.value(hi) <= integral); ++k, step *= 2.0) hi += step;
  if (!(f.value(lo) >= integral && f.value(hi) <= integral)) {
    fail(ErrorKind::InvalidArgument, "not invertible at integral value");
  }
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f.value(mid) >= integral) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return -(0.5 * (lo + hi));
}

double entropic(const Cdf& p) {
  // Factor out exp(-s) at the left end of the support to avoid overflow.
  const double s = p.support_min();
  double total = 0.0;
  const auto pts = p.function().breakpoints();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].value != pts[i].left) total += std::exp(-(pts[i].x - s)) * (pts[i].value - pts[i].left);
    if (i + 1 == pts.size()) break;
    const double u = pts[i].x;
    const double v = pts[i + 1].x;
    const double rise = pts[i + 1].left - pts[i].value;
    if (rise != 0.0) total += rise / (v - u) * (std::exp(-(u - s)) - std::exp(-(v - s)));
  }
  return -s + std::log(total);
}

ExtendedReal phi_from_family(const Cdf& p, const AcceptanceFamily& family,
                             const FamilySearch& search) {
  const double reach = 1.0 + std::max(std::abs(p.support_min()), std::abs(p.support_max()));
  double lo = search.m_lo.value_or(-10.0 * reach);
  double hi = search.m_hi.value_or(10.0 * reach);
  require(lo < hi && search.tol > 0.0, "search bracket must satisfy m_lo < m_hi and tol > 0");
  auto contains = [&](double m) { return acceptance_contains(family, m, p); };
  if (contains(hi)) fail(ErrorKind::Bracket, "widen search bracket: accepted at m_hi");
  if (!contains(lo)) {
    if (family.rejects_everything_below(lo, p)) return ExtendedReal::plus_infinity();
    fail(ErrorKind::Bracket, "widen search bracket: rejected at m_lo");
  }
  while (hi - lo > search.tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (contains(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return -(0.5 * (lo + hi));
}

std::pair<ExtendedReal, ExtendedReal> translation_identity_check(const Cdf& p,
                                                                 const LossProfile& profile,
                                                                 double alpha) {
  const ExtendedReal lhs = lambda_var(translate(p, alpha), profile).value;
  const ExtendedReal shifted = lambda_var(p, shift(profile, alpha)).value;
  const ExtendedReal rhs =
      shifted.is_finite() ? ExtendedReal(shifted.value() - alpha) : ExtendedReal::plus_infinity();
  return {lhs, rhs};
}

}  // namespace lvar
