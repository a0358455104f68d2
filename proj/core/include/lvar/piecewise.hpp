#pragma once

#include <span>
#include <utility>
#include <vector>

namespace lvar {

// One abscissa of a right-continuous piecewise-affine function.
struct Breakpoint {
  double x;
  double left;   // limit from the left
  double value;  // value at x (right-continuous)

  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

// The affine piece of a function on an open interval (x0, x1): v0 is the right
// limit at x0 and v1 the left limit at x1. Tails are flat pieces with an
// infinite end.
struct AffinePiece {
  double x0;
  double v0;
  double x1;
  double v1;

  bool flat() const { return v0 == v1; }
};

// Abscissa where a non-flat piece reaches `level`. Hits on either end return
// the stored end exactly.
double level_crossing(const AffinePiece& piece, double level);

// Right-continuous, piecewise-affine function with finitely many jumps and
// constant tails. Every distribution function, loss profile, family member
// and test function in the library is one of these.
//
// Left of the first breakpoint the function equals tail_left, right of the
// last it equals tail_right; between consecutive breakpoints it is affine from
// `value` at the left end to `left` at the right end. Instances are kept in a
// canonical form (no breakpoint that neither jumps nor bends), so equality is
// structural.
class PiecewiseLinear {
 public:
  PiecewiseLinear() = default;
  PiecewiseLinear(std::vector<Breakpoint> points, double tail_left, double tail_right);

  static PiecewiseLinear constant(double c);

  double operator()(double x) const;
  double left_limit(double x) const;

  // The affine piece on the open interval that starts at or contains x.
  AffinePiece piece_after(double x) const;

  std::span<const Breakpoint> breakpoints() const { return points_; }
  double tail_left() const { return tail_left_; }
  double tail_right() const { return tail_right_; }

  bool nondecreasing() const;
  bool nonincreasing() const;
  bool continuous() const;
  bool jumps_at(double x) const;
  double sup() const;
  double inf() const;

  // x -> f(x - m): the graph moves right by m.
  PiecewiseLinear translated(double m) const;

  friend bool operator==(const PiecewiseLinear&, const PiecewiseLinear&) = default;

 private:
  void canonicalize();

  std::vector<Breakpoint> points_;
  double tail_left_ = 0.0;
  double tail_right_ = 0.0;
};

// Sorted union of the breakpoint abscissae of f and g.
std::vector<double> merged_abscissae(const PiecewiseLinear& f, const PiecewiseLinear& g);

// Pointwise op(f, g) on the merged breakpoints. Exact when op is affine in
// its arguments, since both operands are affine between merged breakpoints.
template <class Op>
PiecewiseLinear combine(const PiecewiseLinear& f, const PiecewiseLinear& g, Op op) {
  std::vector<Breakpoint> points;
  for (double x : merged_abscissae(f, g)) {
    points.push_back({x, op(f.left_limit(x), g.left_limit(x)), op(f(x), g(x))});
  }
  return {std::move(points), op(f.tail_left(), g.tail_left()), op(f.tail_right(), g.tail_right())};
}

// a*f + b*g.
PiecewiseLinear linear_combination(double a, const PiecewiseLinear& f, double b,
                                   const PiecewiseLinear& g);

// f(x) <= g(x) for every real x. Decided on merged breakpoints, comparing right
// values and left limits; between breakpoints the difference is affine.
bool pointwise_le(const PiecewiseLinear& f, const PiecewiseLinear& g);

struct Exceedance {
  enum class Kind {
    None,           // f <= g everywhere
    MinusInfinity,  // f > g arbitrarily far to the left
    At,
  };
  Kind kind = Kind::None;
  double x = 0.0;
};

// inf{x : f(x) > g(x)}. Equality never counts as exceedance.
Exceedance first_exceedance(const PiecewiseLinear& f, const PiecewiseLinear& g);

// Riemann-Stieltjes integral of g against F over (a, b]: a jump of F at b is
// included, a jump at a is not. Infinite ends are allowed.
double stieltjes(const PiecewiseLinear& g, const PiecewiseLinear& integrator, double a, double b);

}  // namespace lvar
