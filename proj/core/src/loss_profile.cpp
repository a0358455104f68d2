#include "lvar/loss_profile.hpp"

#include <algorithm>
#include <cmath>

#include "lvar/error.hpp"

namespace lvar {

namespace {

Orientation derive_orientation(const PiecewiseLinear& f) {
  const bool up = f.nondecreasing();
  const bool down = f.nonincreasing();
  if (up && down) return Orientation::Constant;
  if (up) return Orientation::Increasing;
  if (down) return Orientation::Decreasing;
  fail(ErrorKind::InvalidArgument, "loss profile must be monotone");
}

// F = g on (-inf, m), 1 on [m, +inf), where `left_at_m` is g(m-).
PiecewiseLinear cut_at(const PiecewiseLinear& g, double m, double left_at_m) {
  std::vector<Breakpoint> points;
  for (const Breakpoint& b : g.breakpoints()) {
    if (b.x < m) points.push_back(b);
  }
  points.push_back({m, left_at_m, 1.0});
  return {std::move(points), g.tail_left(), 1.0};
}

}  // namespace

LossProfile::LossProfile(PiecewiseLinear f, Orientation declared)
    : f_(std::move(f)), orientation_(derive_orientation(f_)), sup_(f_.sup()), inf_(f_.inf()) {
  require(inf_ >= 0.0 && sup_ <= 1.0, "loss profile must take values in [0, 1]");
  if (orientation_ != Orientation::Constant && declared != Orientation::Constant) {
    require(orientation_ == declared, "loss profile does not match its declared orientation");
  }
  if (declared == Orientation::Constant) {
    require(orientation_ == Orientation::Constant, "loss profile declared constant is not constant");
  }
}

LossProfile constant_profile(double lambda) {
  require(lambda >= 0.0, "profile level must be nonnegative");
  if (lambda >= 1.0) fail(ErrorKind::Infeasible, "infeasible profile: sup Lambda >= 1");
  return {PiecewiseLinear::constant(lambda), Orientation::Constant};
}

LossProfile step_profile(double lambda_min, double lambda_max, double xbar) {
  require(lambda_min >= 0.0 && lambda_min <= lambda_max,
          "step profile requires 0 <= lambda_min <= lambda_max");
  if (lambda_max >= 1.0) fail(ErrorKind::Infeasible, "infeasible profile: sup Lambda >= 1");
  return {PiecewiseLinear({{xbar, lambda_min, lambda_max}}, lambda_min, lambda_max),
          Orientation::Increasing};
}

LossProfile piecewise_profile(std::vector<Breakpoint> points, std::pair<double, double> tails,
                              Orientation orientation) {
  return {PiecewiseLinear(std::move(points), tails.first, tails.second), orientation};
}

LossProfile shift(const LossProfile& profile, double alpha) {
  require(std::isfinite(alpha), "shift must be finite");
  return {profile.function().translated(-alpha), profile.orientation()};
}

bool is_feasible(const LossProfile& profile) { return profile.sup_value() < 1.0; }

PiecewiseLinear family_member(const LossProfile& profile, double m) {
  return cut_at(profile.function(), m, profile.function().left_limit(m));
}

PiecewiseLinear family_member_tilde(const LossProfile& profile, double m) {
  if (!profile.decreasing()) {
    fail(ErrorKind::InvalidArgument, "tilde family requires decreasing Lambda");
  }
  const double level = profile(m);
  return cut_at(PiecewiseLinear::constant(level), m, level);
}

AcceptanceFamily AcceptanceFamily::from_profile(LossProfile profile) {
  return AcceptanceFamily(FromProfile{std::move(profile)});
}

AcceptanceFamily AcceptanceFamily::tilde_from_profile(LossProfile profile) {
  if (!profile.decreasing()) {
    fail(ErrorKind::InvalidArgument, "tilde family requires decreasing Lambda");
  }
  return AcceptanceFamily(TildeFromProfile{std::move(profile)});
}

AcceptanceFamily AcceptanceFamily::table(std::vector<std::pair<double, PiecewiseLinear>> members,
                                         Interpolation interpolation) {
  require(!members.empty(), "family table must not be empty");
  for (std::size_t i = 0; i < members.size(); ++i) {
    const PiecewiseLinear& f = members[i].second;
    require(f.inf() >= 0.0 && f.sup() <= 1.0, "family members must take values in [0, 1]");
    if (i > 0) {
      require(members[i - 1].first < members[i].first, "family levels must be strictly increasing");
      require(pointwise_le(f, members[i - 1].second), "family members must decrease in m");
    }
  }
  return AcceptanceFamily(Table{std::move(members), interpolation});
}

PiecewiseLinear AcceptanceFamily::member(double m) const {
  if (const auto* p = std::get_if<FromProfile>(&kind_)) return family_member(p->profile, m);
  if (const auto* p = std::get_if<TildeFromProfile>(&kind_)) {
    return family_member_tilde(p->profile, m);
  }
  const auto& t = std::get<Table>(kind_);
  auto it = std::lower_bound(t.members.begin(), t.members.end(), m,
                             [](const auto& entry, double v) { return entry.first < v; });
  if (it == t.members.end()) fail(ErrorKind::Bracket, "level above the family table");
  if (t.interpolation == Interpolation::None && it->first != m) {
    fail(ErrorKind::Bracket, "level not in the family table");
  }
  return it->second;
}

bool AcceptanceFamily::rejects_everything_below(double level, const Cdf& p) const {
  if (const auto* fp = std::get_if<FromProfile>(&kind_)) {
    // Only a violation arbitrarily far to the left rejects every level.
    return p.function().tail_left() > fp->profile.function().tail_left();
  }
  if (std::holds_alternative<TildeFromProfile>(kind_)) return false;
  const auto& t = std::get<Table>(kind_);
  if (t.interpolation != Interpolation::StepLeft || level > t.members.front().first) return false;
  // Below the first level the member is constant in m.
  return !pointwise_le(p.function(), t.members.front().second);
}

bool acceptance_contains(const AcceptanceFamily& family, double m, const Cdf& q) {
  return pointwise_le(q.function(), family.member(m));
}

}  // namespace lvar
