#pragma once

#include <compare>
#include <limits>
#include <ostream>

namespace lvar {

// A value in R u {+inf}. Risk values are never -inf; an infeasible profile is
// reported as an error instead.
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;
  constexpr ExtendedReal(double finite) : value_(finite) {}  // NOLINT(google-explicit-constructor)

  static constexpr ExtendedReal plus_infinity() {
    ExtendedReal r;
    r.infinite_ = true;
    return r;
  }

  constexpr bool is_finite() const { return !infinite_; }
  constexpr bool is_plus_infinity() const { return infinite_; }

  // Finite payload; +inf maps to the IEEE infinity.
  constexpr double value() const {
    return infinite_ ? std::numeric_limits<double>::infinity() : value_;
  }

  friend constexpr bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::partial_ordering operator<=>(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtendedReal& r) {
    if (r.infinite_) return os << "+inf";
    return os << r.value_;
  }

 private:
  double value_ = 0.0;
  bool infinite_ = false;
};

}  // namespace lvar
