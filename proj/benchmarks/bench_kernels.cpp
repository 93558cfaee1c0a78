#include <benchmark/benchmark.h>

#include "thetakit/binary_forms.hpp"
#include "thetakit/finite_geometry.hpp"
#include "thetakit/heegner.hpp"
#include "thetakit/lattice.hpp"
#include "thetakit/local_density.hpp"

using namespace thetakit;

static void BM_ThetaZ2(benchmark::State& state) {
  const auto z2 = z2_standard();
  for (auto _ : state) benchmark::DoNotOptimize(theta_coefficients(z2, state.range(0)));
}
BENCHMARK(BM_ThetaZ2)->Arg(1000)->Arg(10000);

static void BM_ThetaE8(benchmark::State& state) {
  const auto e8 = e8_lattice();
  for (auto _ : state) benchmark::DoNotOptimize(theta_coefficients(e8, state.range(0)));
}
BENCHMARK(BM_ThetaE8)->DenseRange(2, 6, 2);

static void BM_HurwitzRelation(benchmark::State& state) {
  for (auto _ : state)
    for (long long m = 1; m <= state.range(0); ++m) benchmark::DoNotOptimize(hurwitz_relation(m));
}
BENCHMARK(BM_HurwitzRelation)->Arg(200);

static void BM_DenCount(benchmark::State& state) {
  const HermLocalLattice L(3, {static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(den_count(L, 2, static_cast<int>(state.range(1))));
}
BENCHMARK(BM_DenCount)->Args({0, 3})->Args({2, 4})->Args({3, 6});

static void BM_Fermat(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fermat_point_count(state.range(0)));
}
BENCHMARK(BM_Fermat)->Arg(3)->Arg(7)->Arg(13);

static void BM_ModularParametrization(benchmark::State& state) {
  const HeckeEigenvalues a(state.range(0));
  const Complex tau = heegner_forms(67).front().tau();
  for (auto _ : state) benchmark::DoNotOptimize(modular_parametrization(tau, a, state.range(0)));
}
BENCHMARK(BM_ModularParametrization)->Arg(500)->Arg(2000);

static void BM_Heegner(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(compute_heegner(state.range(0)));
}
BENCHMARK(BM_Heegner)->Arg(3)->Arg(16)->Arg(67);

BENCHMARK_MAIN();
