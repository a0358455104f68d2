#include <gtest/gtest.h>

#include "lvar/error.hpp"
#include "lvar/loss_profile.hpp"
#include "lvar/reporting/fixtures.hpp"

namespace {

using namespace lvar;

TEST(Profile, Constant) {
  EXPECT_EQ(constant_profile(0.05)(-100.0), 0.05);
  EXPECT_EQ(constant_profile(0.05)(3.0), 0.05);
  EXPECT_TRUE(is_feasible(constant_profile(0.0)));
  EXPECT_TRUE(is_feasible(constant_profile(0.5)));
  try {
    constant_profile(1.0);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Infeasible);
  }
}

TEST(Profile, Step) {
  const LossProfile s = step_profile(0.1, 0.3, 0.0);
  EXPECT_EQ(s(-0.001), 0.1);
  EXPECT_EQ(s(0.0), 0.3);
  EXPECT_EQ(s.sup_value(), 0.3);
  EXPECT_EQ(s.inf_value(), 0.1);
  EXPECT_THROW(step_profile(0.3, 0.1, 0.0), Error);
}

TEST(Profile, PiecewiseEncodingOfStep) {
  const LossProfile p = piecewise_profile({{0.0, 0.1, 0.3}}, {0.1, 0.3}, Orientation::Increasing);
  EXPECT_EQ(p, step_profile(0.1, 0.3, 0.0));
}

TEST(Profile, DecreasingAccepted) {
  const LossProfile p =
      piecewise_profile({{-1.0, 0.9, 0.9}, {1.0, 0.05, 0.05}}, {0.9, 0.05}, Orientation::Decreasing);
  EXPECT_EQ(p.orientation(), Orientation::Decreasing);
  EXPECT_EQ(p(-5.0), 0.9);
  EXPECT_EQ(p(5.0), 0.05);
}

TEST(Profile, RejectsNonMonotoneAndOutOfRange) {
  EXPECT_THROW(piecewise_profile({{0.0, 0.1, 0.5}, {1.0, 0.5, 0.2}}, {0.1, 0.2}, Orientation::Increasing),
               Error);
  EXPECT_THROW(piecewise_profile({{0.0, 0.1, 0.3}}, {0.1, 0.3}, Orientation::Decreasing), Error);
  EXPECT_THROW(piecewise_profile({{0.0, -0.1, 0.3}}, {-0.1, 0.3}, Orientation::Increasing), Error);
}

TEST(Profile, FeasibilityNeedsSupBelowOne) {
  const LossProfile p = piecewise_profile({{0.0, 0.5, 1.0}}, {0.5, 1.0}, Orientation::Increasing);
  EXPECT_FALSE(is_feasible(p));
}

TEST(Profile, Shift) {
  const LossProfile s = step_profile(0.1, 0.3, 0.0);
  EXPECT_EQ(shift(s, 0.0), s);
  EXPECT_EQ(shift(s, 2.0), step_profile(0.1, 0.3, -2.0));
  fixtures::Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const LossProfile l = fixtures::random_increasing_profile(rng);
    const LossProfile moved = shift(l, rng.uniform(0.0, 5.0));
    for (int k = 0; k < 20; ++k) {
      const double x = rng.uniform(-12.0, 12.0);
      EXPECT_GE(moved(x), l(x));
    }
  }
}

TEST(Family, MemberOfWorstCaseIsIndicator) {
  const PiecewiseLinear m = family_member(constant_profile(0.0), 2.0);
  EXPECT_EQ(m, PiecewiseLinear({{2.0, 0.0, 1.0}}, 0.0, 1.0));
}

TEST(Family, MemberValues) {
  const LossProfile l = constant_profile(0.25);
  EXPECT_EQ(family_member(l, 0.0)(-1.0), 0.25);
  EXPECT_EQ(family_member(l, 0.0)(0.0), 1.0);
  EXPECT_EQ(family_member(step_profile(0.1, 0.3, 0.0), 1.0)(0.5), 0.3);
}

TEST(Family, TildeMember) {
  const LossProfile c = constant_profile(0.2);
  EXPECT_EQ(family_member_tilde(c, 1.0), family_member(c, 1.0));
  const LossProfile d =
      piecewise_profile({{-1.0, 0.9, 0.9}, {1.0, 0.05, 0.05}}, {0.9, 0.05}, Orientation::Decreasing);
  const double m = 0.5;
  const PiecewiseLinear tilde = family_member_tilde(d, m);
  const PiecewiseLinear plain = family_member(d, m);
  for (double x = -3.0; x < m; x += 0.01) EXPECT_LE(tilde(x), plain(x));
  EXPECT_EQ(tilde(m), 1.0);
  EXPECT_EQ(plain(m + 1.0), 1.0);
  EXPECT_THROW(family_member_tilde(step_profile(0.1, 0.3, 0.0), 0.0), Error);
}

TEST(Family, WorstCaseContainment) {
  const AcceptanceFamily w = AcceptanceFamily::from_profile(constant_profile(0.0));
  EXPECT_TRUE(acceptance_contains(w, 2.0, dirac(2.0)));
  EXPECT_FALSE(acceptance_contains(w, 2.0, dirac(1.0)));
}

TEST(Family, ContainmentIsAntitoneInLevel) {
  fixtures::Rng rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const AcceptanceFamily fam = AcceptanceFamily::from_profile(fixtures::random_profile(rng));
    const Cdf q = fixtures::random_distribution(rng);
    double m1 = rng.uniform(-12.0, 12.0);
    double m2 = rng.uniform(-12.0, 12.0);
    if (m1 > m2) std::swap(m1, m2);
    if (acceptance_contains(fam, m2, q)) EXPECT_TRUE(acceptance_contains(fam, m1, q));
  }
}

TEST(Family, Table) {
  std::vector<std::pair<double, PiecewiseLinear>> members{
      {0.0, family_member(constant_profile(0.2), 0.0)},
      {1.0, family_member(constant_profile(0.2), 1.0)},
  };
  const AcceptanceFamily step = AcceptanceFamily::table(members, Interpolation::StepLeft);
  EXPECT_EQ(step.member(0.5), members[1].second);
  EXPECT_THROW(step.member(2.0), Error);
  const AcceptanceFamily exact = AcceptanceFamily::table(members, Interpolation::None);
  EXPECT_EQ(exact.member(0.0), members[0].second);
  EXPECT_THROW(exact.member(0.5), Error);
  std::vector<std::pair<double, PiecewiseLinear>> increasing{members[1], members[0]};
  increasing[0].first = 0.0;
  increasing[1].first = 1.0;
  EXPECT_THROW(AcceptanceFamily::table(increasing, Interpolation::StepLeft), Error);
}

}  // namespace
