#include <gtest/gtest.h>

#include <vector>

#include "lvar/distribution.hpp"
#include "lvar/error.hpp"
#include "lvar/reporting/fixtures.hpp"
#include "oracles.hpp"

namespace {

using namespace lvar;

const std::vector<double> kFour{-10.0, -5.0, 0.0, 5.0};

TEST(Cdf, DiracIsRightContinuous) {
  EXPECT_EQ(dirac(3.0)(2.9), 0.0);
  EXPECT_EQ(dirac(3.0)(3.0), 1.0);
  EXPECT_EQ(dirac(0.0)(-0.001), 0.0);
  EXPECT_EQ(dirac(0.0)(0.0), 1.0);
}

TEST(Cdf, EmpiricalCounts) {
  const Cdf p = from_samples(kFour);
  EXPECT_EQ(p(-5.0), 0.5);
  EXPECT_EQ(p(0.0), 0.75);
  EXPECT_EQ(from_samples(std::vector<double>{0.0}), dirac(0.0));
  const Cdf ties = from_samples(std::vector<double>{1.0, 1.0, 2.0});
  EXPECT_DOUBLE_EQ(ties(1.0) - ties.left_limit(1.0), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(ties(2.0) - ties.left_limit(2.0), 1.0 / 3.0);
  EXPECT_THROW(from_samples(std::vector<double>{}), Error);
}

TEST(Cdf, EmpiricalMatchesCountOracle) {
  fixtures::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::vector<double> xs = fixtures::random_samples(rng);
    const Cdf p = from_samples(xs);
    for (double x : xs) EXPECT_EQ(p(x), oracle::empirical_cdf(xs, x));
    const double probe = rng.uniform(-11.0, 11.0);
    EXPECT_EQ(p(probe), oracle::empirical_cdf(xs, probe));
  }
}

TEST(Cdf, Uniform) {
  EXPECT_EQ(uniform(0.0, 1.0)(0.5), 0.5);
  EXPECT_DOUBLE_EQ(uniform(-0.1, 0.9)(0.0), 0.1);
  EXPECT_FALSE(uniform(0.0, 1.0).has_atoms());
  EXPECT_THROW(uniform(1.0, 1.0), Error);
}

TEST(Cdf, Mixture) {
  const Cdf p = uniform(0.0, 2.0);
  EXPECT_EQ(mixture(p, dirac(5.0), 1.0), p);
  EXPECT_EQ(mixture(dirac(0.0), dirac(1.0), 0.5)(0.0), 0.5);
  EXPECT_DOUBLE_EQ(mixture(uniform(0.0, 1.0), dirac(0.5), 0.5)(0.5), 0.75);
  EXPECT_THROW(mixture(p, p, 1.5), Error);
}

TEST(Cdf, Translate) {
  const Cdf p = uniform(-1.0, 3.0);
  EXPECT_EQ(translate(p, 0.0), p);
  EXPECT_EQ(translate(dirac(1.0), 2.0), dirac(3.0));
  EXPECT_EQ(translate(dirac(0.0), 5.0), dirac(5.0));
  EXPECT_TRUE(dominates(translate(p, 1.0), p));
}

TEST(Cdf, QuantileRight) {
  EXPECT_EQ(quantile_right(dirac(3.0), 0.5), 3.0);
  EXPECT_EQ(quantile_right(uniform(0.0, 1.0), 0.25), 0.25);
  EXPECT_EQ(quantile_right(from_samples(kFour), 0.25), -5.0);
  EXPECT_THROW(quantile_right(dirac(0.0), 1.0), Error);
}

TEST(Cdf, QuantileMatchesGridScan) {
  // sup{x : F(x) <= 0.25} scanned on a fine grid.
  const Cdf p = from_samples(kFour);
  double sup = -oracle::kInf;
  for (int i = 0; i <= 200000; ++i) {
    const double x = -20.0 + 40.0 * i / 200000.0;
    if (p(x) <= 0.25) sup = x;
  }
  EXPECT_NEAR(quantile_right(p, 0.25), sup, 2e-4);
}

TEST(Cdf, QuantileMatchesSortedOracle) {
  fixtures::Rng rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    const std::vector<double> xs = fixtures::random_samples(rng);
    const double lambda = rng.uniform(0.001, 0.999);
    EXPECT_EQ(quantile_right(from_samples(xs), lambda), oracle::empirical_quantile_right(xs, lambda));
  }
}

TEST(Cdf, Dominance) {
  const Cdf p = from_samples(kFour);
  EXPECT_TRUE(dominates(p, p));
  EXPECT_TRUE(dominates(dirac(1.0), dirac(0.0)));
  EXPECT_FALSE(dominates(dirac(0.0), dirac(1.0)));
  EXPECT_FALSE(dominates(uniform(0.0, 1.0), uniform(0.5, 1.5)));
}

TEST(Cdf, DominatedPairFixtures) {
  fixtures::Rng rng(13);
  int dominated = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto [p, q] = fixtures::random_dominated_pair(rng);
    dominated += dominates(p, q) ? 1 : 0;
  }
  EXPECT_GE(dominated, 295);
}

TEST(Cdf, Support) {
  EXPECT_EQ(from_samples(kFour).support_min(), -10.0);
  EXPECT_EQ(from_samples(kFour).support_max(), 5.0);
  EXPECT_EQ(uniform(-0.1, 0.9).support_min(), -0.1);
}

TEST(Cdf, LeftTruncationMovesMassUp) {
  const Cdf p = from_samples(kFour);
  const Cdf t = left_truncate(p.function(), -6.0);
  EXPECT_EQ(t(-6.0), 0.25);
  EXPECT_EQ(t(-7.0), 0.0);
  EXPECT_EQ(t(0.0), 0.75);
  EXPECT_TRUE(dominates(t, p));
}

TEST(WeakConvergence, ConstantSequence) {
  const Cdf p = uniform(0.0, 1.0);
  const std::vector<Cdf> seq{p, p, p};
  const std::vector<double> probes{0.25, 0.5};
  EXPECT_TRUE(converges_weakly(seq, p, probes));
}

TEST(WeakConvergence, SlidingUniforms) {
  std::vector<Cdf> seq;
  for (int n = 1; n <= 50; ++n) seq.push_back(uniform(-1.0 / n, 1.0 - 1.0 / n));
  const std::vector<double> probes{0.25, 0.5, 0.75};
  EXPECT_TRUE(converges_weakly(seq, uniform(0.0, 1.0), probes));
}

TEST(WeakConvergence, RejectsProbeOnJump) {
  std::vector<Cdf> seq;
  for (int n = 1; n <= 10; ++n) seq.push_back(dirac(1.0 / n));
  const std::vector<double> probes{0.0};
  EXPECT_THROW(converges_weakly(seq, dirac(0.0), probes), Error);
}

TEST(WeakConvergence, DetectsNonConvergence) {
  std::vector<Cdf> seq;
  for (int n = 1; n <= 20; ++n) seq.push_back(uniform(0.0, 1.0));
  const std::vector<double> probes{0.5};
  EXPECT_FALSE(converges_weakly(seq, uniform(1.0, 2.0), probes));
}

}  // namespace
