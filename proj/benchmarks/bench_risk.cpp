#include <benchmark/benchmark.h>

#include "lvar/lvar.hpp"
#include "lvar/reporting/fixtures.hpp"

namespace {

using namespace lvar;

std::vector<double> samples(std::size_t n) {
  fixtures::Rng rng(99);
  std::vector<double> xs(n);
  for (double& x : xs) x = rng.uniform(-10.0, 10.0);
  return xs;
}

void BM_FromSamples(benchmark::State& state) {
  const std::vector<double> xs = samples(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(from_samples(xs));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FromSamples)->RangeMultiplier(8)->Range(8, 1 << 15)->Complexity();

void BM_LambdaVar(benchmark::State& state) {
  const Cdf p = from_samples(samples(static_cast<std::size_t>(state.range(0))));
  fixtures::Rng rng(7);
  const LossProfile l = fixtures::random_increasing_profile(rng, {.max_breakpoints = 16});
  for (auto _ : state) benchmark::DoNotOptimize(lambda_var(p, l));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LambdaVar)->RangeMultiplier(8)->Range(8, 1 << 15)->Complexity();

void BM_PhiFromFamily(benchmark::State& state) {
  const Cdf p = from_samples(samples(static_cast<std::size_t>(state.range(0))));
  const AcceptanceFamily fam = AcceptanceFamily::from_profile(step_profile(0.05, 0.2, 0.0));
  for (auto _ : state) benchmark::DoNotOptimize(phi_from_family(p, fam));
}
BENCHMARK(BM_PhiFromFamily)->Arg(20)->Arg(1000);

void BM_Entropic(benchmark::State& state) {
  const Cdf p = from_samples(samples(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(entropic(p));
}
BENCHMARK(BM_Entropic)->Arg(20)->Arg(1000);

void BM_Ladder(benchmark::State& state) {
  const Cdf p = from_samples(samples(10));
  const RiskModel model = var_model(0.25);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ladder_representation_bound(p, model, static_cast<std::size_t>(state.range(0)), 0.01));
  }
}
BENCHMARK(BM_Ladder)->Arg(20)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
