#include <benchmark/benchmark.h>

#include "longtube/collar_bounds.hpp"
#include "longtube/fourier_annulus.hpp"
#include "longtube/pairing.hpp"
#include "longtube/schwarzian.hpp"
#include "longtube/synthetic_tube.hpp"
#include "longtube/tube_geometry.hpp"

using namespace longtube;

static void BM_SchwarzianSampled(benchmark::State& state) {
  const HolomorphicMap f = HolomorphicMap::sampled(
      [](Complex z) { return std::pow(z, Complex(0.0, 6.0)); }, Domain::slit_plane());
  for (auto _ : state) benchmark::DoNotOptimize(schwarzian_numeric(f, {0.3, 1.2}));
}
BENCHMARK(BM_SchwarzianSampled);

static void BM_SymmetricPairing(benchmark::State& state) {
  const QuadraticDifferential q = schwarzian_differential(symmetric_developing_map(0.5));
  const CoreCurve core = CoreCurve::halfplane(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(pair(q, core));
}
BENCHMARK(BM_SymmetricPairing);

static void BM_SyntheticTube(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(make_synthetic_tube(kEps0, kWCap, ++seed));
}
BENCHMARK(BM_SyntheticTube);

static void BM_FitBoundary(benchmark::State& state) {
  const SyntheticTube t = make_synthetic_tube(kEps0, kWCap, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fit_boundary(t.fh.m(), t.boundary.plus, t.boundary.minus, t.fh.K()));
  }
}
BENCHMARK(BM_FitBoundary);

static void BM_DerivativeBounds(benchmark::State& state) {
  const SyntheticTube t = make_synthetic_tube(kEps0, kWCap, 2);
  for (auto _ : state) benchmark::DoNotOptimize(derivative_bounds_at_core(t.fh, kWCap));
}
BENCHMARK(BM_DerivativeBounds);

static void BM_DevelopCore(benchmark::State& state) {
  const SyntheticTube t = make_synthetic_tube(kEps0, kWCap, 3);
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(develop_core(t.fh, kEps0, steps));
}
BENCHMARK(BM_DevelopCore)->Arg(1024)->Arg(4096);

static void BM_AnalyzeTube(benchmark::State& state) {
  const SyntheticTube t = make_synthetic_tube(0.5, kWCap, 4);
  for (auto _ : state) benchmark::DoNotOptimize(analyze_tube(t));
}
BENCHMARK(BM_AnalyzeTube);
BENCHMARK_MAIN();
