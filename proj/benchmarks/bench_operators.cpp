#include <benchmark/benchmark.h>

#include "fockbench/fockbench.hpp"

using namespace fock;

static void BM_PlanarRule(benchmark::State& state) {
  const int nr = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(make_rule(RuleKind::PlanarPolar, {nr, 256}));
}
BENCHMARK(BM_PlanarRule)->Arg(50)->Arg(200);

static void BM_ToeplitzRadial(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto f = SymbolSpec::radial_disc(1.5, 1.0, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(toeplitz_matrix(f, N));
}
BENCHMARK(BM_ToeplitzRadial)->Arg(16)->Arg(48);

static void BM_ToeplitzGeneric(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto f = SymbolSpec::plane_wave({0.4, -0.3});
  for (auto _ : state) benchmark::DoNotOptimize(toeplitz_matrix(f, N));
}
BENCHMARK(BM_ToeplitzGeneric)->Arg(16)->Arg(48)->Unit(benchmark::kMillisecond);

static void BM_Weyl(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(weyl_matrix({0.7, 0.2}, N));
}
BENCHMARK(BM_Weyl)->Arg(16)->Arg(48)->Arg(128);

static void BM_SingularMultiplier(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto m = LineProfile::step(-1.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(singular_integral_matrix_multiplier(m, N));
}
BENCHMARK(BM_SingularMultiplier)->Arg(12)->Arg(48)->Unit(benchmark::kMillisecond);

static void BM_SingularDirect(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto m = LineProfile::step(-1.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(singular_integral_matrix_direct(m, N));
}
BENCHMARK(BM_SingularDirect)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_Berezin(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto A = weyl_matrix({0.5, 0.5}, N);
  cplx z(0.3, -0.2);
  for (auto _ : state) benchmark::DoNotOptimize(berezin(A, z));
}
BENCHMARK(BM_Berezin)->Arg(16)->Arg(48)->Arg(128);

static void BM_FourierWeyl(benchmark::State& state) {
  const auto P = basis_projection(3, 48);
  for (auto _ : state) benchmark::DoNotOptimize(fourier_weyl(P, {0.8, 0.4}));
}
BENCHMARK(BM_FourierWeyl);
BENCHMARK_MAIN();
