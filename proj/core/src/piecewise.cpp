#include "lvar/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lvar/error.hpp"

namespace lvar {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool all_finite(const Breakpoint& p) {
  return std::isfinite(p.x) && std::isfinite(p.left) && std::isfinite(p.value);
}

}  // namespace

double level_crossing(const AffinePiece& piece, double level) {
  if (level == piece.v1) return piece.x1;
  if (level == piece.v0) return piece.x0;
  return piece.x0 + (level - piece.v0) * (piece.x1 - piece.x0) / (piece.v1 - piece.v0);
}

PiecewiseLinear::PiecewiseLinear(std::vector<Breakpoint> points, double tail_left,
                                 double tail_right)
    : points_(std::move(points)), tail_left_(tail_left), tail_right_(tail_right) {
  require(std::isfinite(tail_left) && std::isfinite(tail_right), "tails must be finite");
  if (points_.empty()) {
    require(tail_left == tail_right, "a function without breakpoints must be constant");
    return;
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    require(all_finite(points_[i]), "breakpoints must be finite");
    if (i > 0) require(points_[i - 1].x < points_[i].x, "breakpoints must be strictly increasing");
  }
  require(points_.front().left == tail_left, "left limit at the first breakpoint must equal tail_left");
  require(points_.back().value == tail_right, "value at the last breakpoint must equal tail_right");
  canonicalize();
}

PiecewiseLinear PiecewiseLinear::constant(double c) { return {{}, c, c}; }

void PiecewiseLinear::canonicalize() {
  std::vector<Breakpoint> kept;
  kept.reserve(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const Breakpoint& p = points_[i];
    if (p.left != p.value) {
      kept.push_back(p);
      continue;
    }
    // Slope test via cross products; a missing neighbour means a flat tail.
    const bool has_prev = !kept.empty();
    const bool has_next = i + 1 < points_.size();
    const double rise_in = has_prev ? p.left - kept.back().value : 0.0;
    const double rise_out = has_next ? points_[i + 1].left - p.value : 0.0;
    bool bends = false;
    if (has_prev && has_next) {
      bends = rise_in * (points_[i + 1].x - p.x) != rise_out * (p.x - kept.back().x);
    } else {
      // Against a flat tail the neighbouring piece must be flat too.
      bends = rise_in != 0.0 || rise_out != 0.0;
    }
    if (bends) kept.push_back(p);
  }
  points_ = std::move(kept);
}

double PiecewiseLinear::operator()(double x) const {
  auto it = std::upper_bound(points_.begin(), points_.end(), x,
                             [](double v, const Breakpoint& p) { return v < p.x; });
  if (it == points_.begin()) return tail_left_;
  const auto k = static_cast<std::size_t>(it - points_.begin()) - 1;
  const Breakpoint& p = points_[k];
  if (k + 1 == points_.size() || x == p.x) return p.value;
  const Breakpoint& q = points_[k + 1];
  return p.value + (q.left - p.value) * ((x - p.x) / (q.x - p.x));
}

double PiecewiseLinear::left_limit(double x) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), x,
                             [](const Breakpoint& p, double v) { return p.x < v; });
  if (it != points_.end() && it->x == x) return it->left;
  return (*this)(x);
}

AffinePiece PiecewiseLinear::piece_after(double x) const {
  auto it = std::upper_bound(points_.begin(), points_.end(), x,
                             [](double v, const Breakpoint& p) { return v < p.x; });
  if (it == points_.begin()) {
    const double x1 = points_.empty() ? kInf : points_.front().x;
    return {-kInf, tail_left_, x1, tail_left_};
  }
  const auto k = static_cast<std::size_t>(it - points_.begin()) - 1;
  if (k + 1 == points_.size()) return {points_[k].x, tail_right_, kInf, tail_right_};
  return {points_[k].x, points_[k].value, points_[k + 1].x, points_[k + 1].left};
}

bool PiecewiseLinear::nondecreasing() const {
  double prev = tail_left_;
  for (const Breakpoint& p : points_) {
    if (p.left < prev || p.value < p.left) return false;
    prev = p.value;
  }
  return tail_right_ >= prev;
}

bool PiecewiseLinear::nonincreasing() const {
  double prev = tail_left_;
  for (const Breakpoint& p : points_) {
    if (p.left > prev || p.value > p.left) return false;
    prev = p.value;
  }
  return tail_right_ <= prev;
}

bool PiecewiseLinear::continuous() const {
  return std::all_of(points_.begin(), points_.end(),
                     [](const Breakpoint& p) { return p.left == p.value; });
}

bool PiecewiseLinear::jumps_at(double x) const { return left_limit(x) != (*this)(x); }

double PiecewiseLinear::sup() const {
  double s = std::max(tail_left_, tail_right_);
  for (const Breakpoint& p : points_) s = std::max({s, p.left, p.value});
  return s;
}

double PiecewiseLinear::inf() const {
  double s = std::min(tail_left_, tail_right_);
  for (const Breakpoint& p : points_) s = std::min({s, p.left, p.value});
  return s;
}

PiecewiseLinear PiecewiseLinear::translated(double m) const {
  std::vector<Breakpoint> moved(points_);
  for (Breakpoint& p : moved) p.x += m;
  return {std::move(moved), tail_left_, tail_right_};
}

std::vector<double> merged_abscissae(const PiecewiseLinear& f, const PiecewiseLinear& g) {
  std::vector<double> xs;
  xs.reserve(f.breakpoints().size() + g.breakpoints().size());
  for (const Breakpoint& p : f.breakpoints()) xs.push_back(p.x);
  for (const Breakpoint& p : g.breakpoints()) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

PiecewiseLinear linear_combination(double a, const PiecewiseLinear& f, double b,
                                   const PiecewiseLinear& g) {
  return combine(f, g, [a, b](double u, double v) { return a * u + b * v; });
}

bool pointwise_le(const PiecewiseLinear& f, const PiecewiseLinear& g) {
  if (f.tail_left() > g.tail_left() || f.tail_right() > g.tail_right()) return false;
  for (double x : merged_abscissae(f, g)) {
    if (f.left_limit(x) > g.left_limit(x) || f(x) > g(x)) return false;
  }
  return true;
}

Exceedance first_exceedance(const PiecewiseLinear& f, const PiecewiseLinear& g) {
  using Kind = Exceedance::Kind;
  if (f.tail_left() > g.tail_left()) return {Kind::MinusInfinity, -kInf};
  bool have_prev = false;
  double prev = 0.0;
  for (double x : merged_abscissae(f, g)) {
    if (have_prev) {
      // Open interval (prev, x): the difference is affine, <= 0 at prev.
      const double d_end = f.left_limit(x) - g.left_limit(x);
      if (d_end > 0.0) {
        const AffinePiece pf = f.piece_after(prev);
        const AffinePiece pg = g.piece_after(prev);
        double c;
        if (pg.flat()) {
          c = level_crossing(pf, pg.v0);
        } else if (pf.flat()) {
          c = level_crossing(pg, pf.v0);
        } else {
          const double d_start = f(prev) - g(prev);
          c = prev + (-d_start) / (d_end - d_start) * (x - prev);
        }
        return {Kind::At, std::clamp(c, prev, x)};
      }
    }
    if (f(x) > g(x)) return {Kind::At, x};
    have_prev = true;
    prev = x;
  }
  return {};
}

double stieltjes(const PiecewiseLinear& g, const PiecewiseLinear& integrator, double a, double b) {
  if (!(a < b)) return 0.0;
  const PiecewiseLinear& F = integrator;
  double total = 0.0;
  for (const Breakpoint& p : F.breakpoints()) {
    if (p.x > a && p.x <= b && p.value != p.left) total += g(p.x) * (p.value - p.left);
  }
  std::vector<double> knots;
  if (std::isfinite(a)) knots.push_back(a);
  for (double x : merged_abscissae(g, F)) {
    if (x > a && x < b) knots.push_back(x);
  }
  if (std::isfinite(b)) knots.push_back(b);
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const double u = knots[i];
    const double v = knots[i + 1];
    const double rise = F.left_limit(v) - F(u);
    if (rise != 0.0) total += rise * (0.5 * (g(u) + g.left_limit(v)));
  }
  return total;
}

}  // namespace lvar
