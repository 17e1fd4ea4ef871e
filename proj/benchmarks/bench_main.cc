#include <benchmark/benchmark.h>

#include <random>

#include "incidence/fixtures.h"
#include "incidence/moves.h"
#include "incidence/pentagram.h"
#include "incidence/spectral.h"

using namespace incidence;

namespace {

Config random_pentagram(int n, int k) {
  std::mt19937_64 rng(17);
  return pentagram_fixture(k, random_params(n, rng));
}

void BM_SpectralPolynomial(benchmark::State& state) {
  const Config c = random_pentagram(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_polynomial(c));
}
BENCHMARK(BM_SpectralPolynomial)->DenseRange(5, 9)->Unit(benchmark::kMillisecond);

void BM_PentagramStepScript(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Config c = random_pentagram(n, 2);
  const MoveScript s = pentagram_step_script(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(apply_script(c, s));
}
BENCHMARK(BM_PentagramStepScript)->DenseRange(5, 9)->Unit(benchmark::kMillisecond);

// Direct intersection formula, for comparison with the move script.
void BM_PentagramMap(benchmark::State& state) {
  const Config c = random_pentagram(static_cast<int>(state.range(0)), 2);
  const Polygon P = pentagram_points(c);
  for (auto _ : state) benchmark::DoNotOptimize(pentagram_map(P, 2));
}
BENCHMARK(BM_PentagramMap)->DenseRange(5, 9)->Unit(benchmark::kMillisecond);

void BM_Reconstruct(benchmark::State& state) {
  const Config c = strip_black(pentagon_fixture());
  const SpectralPoint pt{Scalar::ratio(-1, 1), Scalar::ratio(-1, 1)};
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_black(c, pt));
}
BENCHMARK(BM_Reconstruct)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
