#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lvar/distribution.hpp"
#include "lvar/extended_real.hpp"
#include "lvar/loss_profile.hpp"
#include "lvar/piecewise.hpp"

namespace lvar {

// A bounded, continuous, nonincreasing piecewise-linear function: the dual
// variables of the quasi-convex representation.
class TestFunction {
 public:
  explicit TestFunction(PiecewiseLinear f);

  // Continuous interpolation of (x, y) nodes, constant beyond the end nodes.
  static TestFunction through(std::span<const std::pair<double, double>> nodes);

  double operator()(double x) const { return f_(x); }
  const PiecewiseLinear& function() const { return f_; }
  double limit_left() const { return f_.tail_left(); }    // f(-inf)
  double limit_right() const { return f_.tail_right(); }  // f(+inf)

 private:
  PiecewiseLinear f_;
};

// f = -F_Q for a continuous distribution Q.
TestFunction from_cdf_negated(const Cdf& q);

// inf{x : f(x) <= y} for y in [f(+inf), f(-inf)]. May be -inf when f is flat
// at level y on its left tail.
double left_inverse(const TestFunction& f, double y);

// int f dQ over the whole line.
double expectation(const TestFunction& f, const Cdf& q);

// gamma(m, f) = int f dF_{-m} + F_{-m}(-inf) f(-inf), for families whose
// members are nondecreasing in x.
double gamma_family(double m, const TestFunction& f, const AcceptanceFamily& family);

// gamma(m, f) = f(-inf) + int_{(-inf, -m]} (1 - Lambda) df for increasing profiles.
double gamma_lambda(double m, const TestFunction& f, const LossProfile& profile);

// gamma(m, f) = [1 - Lambda(-m)] f(-m) + Lambda(-m) f(-inf) for continuous
// decreasing profiles.
double gamma_decreasing(double m, const TestFunction& f, const LossProfile& profile);

using RiskFunctional = std::function<ExtendedReal(const Cdf&)>;
using GammaFunction = std::function<double(double)>;

// sup of int f dQ over the candidates with risk(Q) <= m; a lower bound on gamma.
double gamma_bruteforce(double m, const TestFunction& f, const RiskFunctional& risk,
                        std::span<const Cdf> candidates);

// Q_n with F_{Q_n} = F_{-m} 1_{[-n, +inf)}, n = 1..n_max: the maximizing
// sequence for gamma(m, f).
std::vector<Cdf> truncation_sequence(const PiecewiseLinear& member, int n_max);

// R^-(t, f) = -H^l(t - f(-inf)) with H(s) = int_{(-inf, s]} (1 - Lambda) df.
ExtendedReal r_minus(double t, const TestFunction& f, const LossProfile& profile);

struct DualSearch {
  double m_lo;
  double m_hi;
  double tol = 1e-9;
};

// Bracket covering every breakpoint of f and of a model with the given scale.
DualSearch default_dual_search(const TestFunction& f, double model_scale, double tol = 1e-9);

// R^-(t, f) = inf{m : gamma(m) >= t} by bisection. Returns the lower end of
// the final bracket, which never overshoots the true value. Returns +inf when
// gamma stays below t on the bracket and throws ErrorKind::DualRange when
// gamma already reaches t at m_lo (the infimum is -inf or below the bracket).
ExtendedReal r_minus_from_gamma(double t, const GammaFunction& gamma, const DualSearch& search);

// R(t, f) = inf{risk(Q) : int f dQ >= t} over the candidates; +inf if none.
ExtendedReal r_direct(double t, const TestFunction& f, const RiskFunctional& risk,
                      std::span<const Cdf> candidates);

// A risk functional paired with its dual function gamma.
struct RiskModel {
  std::string name;
  RiskFunctional phi;
  std::function<double(double, const TestFunction&)> gamma;
  double scale = 0.0;  // largest |abscissa| among the model's own breakpoints
};

// Lambda V@R; gamma is taken from the increasing or decreasing closed form.
RiskModel lambda_var_model(const LossProfile& profile);
RiskModel var_model(double lambda);
RiskModel worst_case_model();

struct DualBoundReport {
  ExtendedReal phi_value;
  double best_lower_bound;  // -inf when no test function gives a finite bound
  ExtendedReal gap;
  std::optional<std::size_t> argmax_function_index;
};

// max over fs of R^-(int f dP, f), a certified lower bound on Phi(P).
DualBoundReport representation_bound(const Cdf& p, const RiskModel& model,
                                     std::span<const TestFunction> fs, double tol = 1e-9);

struct LadderBound {
  DualBoundReport report;
  std::vector<double> centers;  // test function i is -F of uniform(c_i, c_i + delta)
  double delta;
};

// Two-stage ladder of -F_{U[c, c + delta]} test functions: half on a coarse
// grid over the support, half refined around the best coarse center.
LadderBound ladder_representation_bound(const Cdf& p, const RiskModel& model,
                                        std::size_t n_functions, double delta, double tol = 1e-9);

// max_{n = 1..N} f(n) - risk(delta_n): a lower bound on the convex conjugate
// at f, unbounded in N for cash-additive risks.
double conjugate_divergence_witness(const RiskFunctional& risk, const TestFunction& f, int n_max);

}  // namespace lvar
