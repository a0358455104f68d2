#pragma once

#include <span>
#include <vector>

#include "lvar/piecewise.hpp"

namespace lvar {

// Distribution function F_P(x) = P(-inf, x] of a probability on the real line:
// nondecreasing, right-continuous, 0 at -inf and 1 at +inf. Atoms of P are
// the jumps value - left of the underlying function.
class Cdf {
 public:
  explicit Cdf(PiecewiseLinear f);

  double operator()(double x) const { return f_(x); }
  double left_limit(double x) const { return f_.left_limit(x); }
  const PiecewiseLinear& function() const { return f_; }

  bool has_atoms() const { return !f_.continuous(); }
  bool has_jump_at(double x) const { return f_.jumps_at(x); }

  // sup{x : F(x) = 0} and inf{x : F(x) = 1}.
  double support_min() const;
  double support_max() const;

  friend bool operator==(const Cdf&, const Cdf&) = default;

 private:
  PiecewiseLinear f_;
};

Cdf dirac(double x);
Cdf uniform(double a, double b);

// Empirical distribution: jump 1/n at every sample, ties merged.
Cdf from_samples(std::span<const double> samples);

// The compound lottery lambda*P + (1-lambda)*Q.
Cdf mixture(const Cdf& p, const Cdf& q, double lambda);

// T_m P: the distribution of X + m, F(x) -> F(x - m).
Cdf translate(const Cdf& p, double m);

// Distribution of max(X, at): the mass below `at` is moved onto `at`.
Cdf left_truncate(const PiecewiseLinear& f, double at);

// q+(lambda) = sup{x : F(x) <= lambda}, lambda in (0, 1).
double quantile_right(const Cdf& p, double lambda);

// True iff Q is dominated by P in first order, i.e. F_P <= F_Q everywhere.
bool dominates(const Cdf& p, const Cdf& q);

struct WeakConvergenceOptions {
  // Errors must be nonincreasing over this trailing fraction of the sequence.
  double tail_fraction = 0.5;
  // Largest error accepted at the last element.
  double tolerance = 0.05;
};

// Probes F_n(x) -> F(x) at caller-chosen continuity points of the limit. A
// probe sitting on a jump of the limit is rejected with an error.
bool converges_weakly(std::span<const Cdf> sequence, const Cdf& limit,
                      std::span<const double> probes, const WeakConvergenceOptions& options = {});

}  // namespace lvar
