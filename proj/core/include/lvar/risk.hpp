#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "lvar/distribution.hpp"
#include "lvar/extended_real.hpp"
#include "lvar/loss_profile.hpp"

namespace lvar {

enum class FinitenessCase {
  Finite,
  PlusInfinityTailDominated,  // F_P exceeds Lambda arbitrarily far to the left
};

struct RiskReport {
  ExtendedReal value;
  // inf{x : F_P(x) > Lambda(x)}, absent when the value is +inf.
  std::optional<double> violation_point;
  FinitenessCase finiteness_case = FinitenessCase::Finite;
};

// Lambda V@R(P) = -inf{x : F_P(x) > Lambda(x)}, computed exactly on the merged
// breakpoints of F_P and Lambda. Throws ErrorKind::Infeasible when sup Lambda
// reaches 1.
RiskReport lambda_var(const Cdf& p, const LossProfile& profile);

// The same risk through the flat family F~_m; requires a continuous,
// decreasing profile. Computed as sup{m : F_P(m-) <= Lambda(m)}.
RiskReport lambda_var_tilde(const Cdf& p, const LossProfile& profile);

// V@R_lambda(P) = -q+(lambda).
double var(const Cdf& p, double lambda);

// -sup{x : F_P(x) = 0}.
ExtendedReal worst_case(const Cdf& p);

// A strictly decreasing continuous function used by certainty equivalents.
// The antiderivative, when present, makes the integral against continuous
// parts of P exact; otherwise Gauss-Legendre quadrature is used.
struct DecreasingFunction {
  std::function<double(double)> value;
  std::function<double(double)> antiderivative;
};

// f(x) = exp(-rate * x).
DecreasingFunction exponential_utility(double rate = 1.0);

// Phi_f(P) = -f^{-1}(int f dP). The inverse is found by bisection to 1e-12.
double certainty_equivalent(const Cdf& p, const DecreasingFunction& f);

// ln int exp(-x) dP(x).
double entropic(const Cdf& p);

struct FamilySearch {
  std::optional<double> m_lo;
  std::optional<double> m_hi;
  double tol = 1e-9;
};

// Phi(P) = -sup{m : P in A^m} by bisection on the level m. This is the
// generic route and serves as the oracle for lambda_var.
ExtendedReal phi_from_family(const Cdf& p, const AcceptanceFamily& family,
                             const FamilySearch& search = {});

// (Lambda V@R(T_alpha P), Lambda^alpha V@R(P) - alpha).
std::pair<ExtendedReal, ExtendedReal> translation_identity_check(const Cdf& p,
                                                                 const LossProfile& profile,
                                                                 double alpha);

}  // namespace lvar
