#include <benchmark/benchmark.h>

#include "blaschke/atlas.hpp"
#include "blaschke/circle.hpp"
#include "blaschke/family.hpp"
#include "blaschke/multiplier.hpp"
#include "blaschke/polys.hpp"

using namespace blaschke;

static void BM_Eval(benchmark::State& state) {
  const BlaschkeParam p(Complex{5.25, 0.3});
  Complex z{0.3, 0.7};
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval(p, z));
    z += Complex{1e-9, 0.0};
  }
}
BENCHMARK(BM_Eval);

static void BM_ClassifyFate(benchmark::State& state) {
  const BlaschkeParam p(Complex{5.25, 0.0});
  const CriticalData c = critical_points(p);
  for (auto _ : state) benchmark::DoNotOptimize(classify_fate(p, c.c_plus, OrbitSpec{}));
}
BENCHMARK(BM_ClassifyFate);

static void BM_ClassifyCircleParameter(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify_parameter({1.07398, 0.5579}, OrbitSpec::grid()));
}
BENCHMARK(BM_ClassifyCircleParameter);

static void BM_ParamGridRow(benchmark::State& state) {
  const PlaneSpec row = PlaneSpec::from_bounds(-8, 8, 0.9, 1.0, static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(param_plane_grid(row, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ParamGridRow)->Arg(200)->Arg(800);

static void BM_Lift(benchmark::State& state) {
  const BlaschkeParam p(Complex{3.0, 0.0});
  for (auto _ : state) benchmark::DoNotOptimize(build_lift(p, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Lift)->Arg(1024)->Arg(4096);

static void BM_Semiconjugacy(benchmark::State& state) {
  const BlaschkeParam p(Complex{3.0, 0.0});
  const LiftTable lift = build_lift(p, 1024);
  for (auto _ : state) benchmark::DoNotOptimize(semiconjugacy(p, lift, 40, 1024));
}
BENCHMARK(BM_Semiconjugacy);

static void BM_PolyClassifyCubic(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(poly_classify({PolyFamily::CubicM, -5.5}, OrbitSpec{}));
}
BENCHMARK(BM_PolyClassifyCubic);

static void BM_SolveMultiplier(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(solve_multiplier(5.25, {0.3, 0.1}));
}
BENCHMARK(BM_SolveMultiplier);
BENCHMARK_MAIN();
