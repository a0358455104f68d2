#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "lvar/distribution.hpp"
#include "lvar/piecewise.hpp"

namespace lvar {

enum class Orientation { Increasing, Decreasing, Constant };

// Probability/Loss function Lambda: R -> [0, 1], right-continuous and
// monotone. Increasing profiles model risk-prudent agents (larger losses are
// tolerated only with smaller probability), decreasing ones risk-seeking
// agents. A constant profile is both.
class LossProfile {
 public:
  // Orientation is derived from the function; `declared` must be compatible.
  LossProfile(PiecewiseLinear f, Orientation declared);

  double operator()(double x) const { return f_(x); }
  const PiecewiseLinear& function() const { return f_; }
  Orientation orientation() const { return orientation_; }

  bool increasing() const { return orientation_ != Orientation::Decreasing; }
  bool decreasing() const { return orientation_ != Orientation::Increasing; }

  // lambda^M = sup Lambda and lambda^m = inf Lambda.
  double sup_value() const { return sup_; }
  double inf_value() const { return inf_; }

  friend bool operator==(const LossProfile& a, const LossProfile& b) { return a.f_ == b.f_; }

 private:
  PiecewiseLinear f_;
  Orientation orientation_;
  double sup_;
  double inf_;
};

// Lambda(x) = lambda. lambda = 0 is the worst-case profile; lambda >= 1 is
// rejected as infeasible.
LossProfile constant_profile(double lambda);

// lambda_min on (-inf, xbar), lambda_max on [xbar, +inf).
LossProfile step_profile(double lambda_min, double lambda_max, double xbar);

LossProfile piecewise_profile(std::vector<Breakpoint> points, std::pair<double, double> tails,
                              Orientation orientation);

// Lambda^alpha(x) = Lambda(x + alpha).
LossProfile shift(const LossProfile& profile, double alpha);

// sup Lambda < 1, which makes the induced family of acceptance sets feasible.
bool is_feasible(const LossProfile& profile);

// F_m = Lambda on (-inf, m), 1 on [m, +inf).
PiecewiseLinear family_member(const LossProfile& profile, double m);

// F~_m = Lambda(m) on (-inf, m), 1 on [m, +inf). Decreasing profiles only.
PiecewiseLinear family_member_tilde(const LossProfile& profile, double m);

enum class Interpolation {
  StepLeft,  // member(m) = member(m_i) for the smallest table level m_i >= m
  None,      // only table levels are defined
};

// A family {F_m} indexed by the level m, with acceptance sets
// A^m = {Q : F_Q <= F_m}.
class AcceptanceFamily {
 public:
  struct FromProfile {
    LossProfile profile;
  };
  struct TildeFromProfile {
    LossProfile profile;
  };
  struct Table {
    std::vector<std::pair<double, PiecewiseLinear>> members;  // strictly increasing levels
    Interpolation interpolation;
  };

  static AcceptanceFamily from_profile(LossProfile profile);
  static AcceptanceFamily tilde_from_profile(LossProfile profile);
  // Validates that members decrease in m and lie in [0, 1].
  static AcceptanceFamily table(std::vector<std::pair<double, PiecewiseLinear>> members,
                                Interpolation interpolation);

  PiecewiseLinear member(double m) const;

  // True when P lies in no A^m with m <= level (so the risk is +inf once P is
  // rejected at `level`).
  bool rejects_everything_below(double level, const Cdf& p) const;

  const std::variant<FromProfile, TildeFromProfile, Table>& kind() const { return kind_; }

 private:
  explicit AcceptanceFamily(std::variant<FromProfile, TildeFromProfile, Table> kind)
      : kind_(std::move(kind)) {}

  std::variant<FromProfile, TildeFromProfile, Table> kind_;
};

bool acceptance_contains(const AcceptanceFamily& family, double m, const Cdf& q);

}  // namespace lvar
