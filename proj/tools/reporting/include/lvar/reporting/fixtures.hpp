#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "lvar/distribution.hpp"
#include "lvar/duality.hpp"
#include "lvar/loss_profile.hpp"

namespace lvar::fixtures {

// Seeded generator whose draws do not depend on the standard library's
// distribution implementations, so suites are reproducible across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  // Integer in [lo, hi].
  int integer(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin(double p = 0.5) { return uniform01() < p; }
  // Multiple of 1/64 in [lo, hi]; sums of a few of these are exact.
  double dyadic(double lo, double hi) {
    const int k = integer(static_cast<int>(lo * 64.0), static_cast<int>(hi * 64.0));
    return static_cast<double>(k) / 64.0;
  }

 private:
  std::mt19937_64 engine_;
};

struct SampleSpec {
  int max_atoms = 20;
  double lo = -10.0;
  double hi = 10.0;
  bool dyadic = false;
};

std::vector<double> random_samples(Rng& rng, const SampleSpec& spec = {});
Cdf random_empirical(Rng& rng, const SampleSpec& spec = {});

// Empirical, uniform, or a mixture of both.
Cdf random_distribution(Rng& rng, const SampleSpec& spec = {});

// (P, Q) with Q dominated by P: F_P <= F_Q.
std::pair<Cdf, Cdf> random_dominated_pair(Rng& rng, const SampleSpec& spec = {});

struct ProfileSpec {
  int max_breakpoints = 4;
  double lo = -10.0;
  double hi = 10.0;
  double max_level = 0.95;
  bool affine = true;  // allow sloped pieces; otherwise piecewise constant
  bool dyadic = false;
};

LossProfile random_increasing_profile(Rng& rng, const ProfileSpec& spec = {});
LossProfile random_decreasing_continuous_profile(Rng& rng, const ProfileSpec& spec = {});
// Increasing or decreasing, with or without jumps.
LossProfile random_profile(Rng& rng, const ProfileSpec& spec = {});

struct TestFunctionSpec {
  int max_nodes = 5;
  double lo = -10.0;
  double hi = 10.0;
  double range = 2.0;  // values in [-range, range]
};

TestFunction random_test_function(Rng& rng, const TestFunctionSpec& spec = {});

}  // namespace lvar::fixtures
