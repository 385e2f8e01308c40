#include <benchmark/benchmark.h>

#include "pottssos/periodic_solver.hpp"
#include "pottssos/phase_diagram.hpp"

using namespace pottssos;

static void BM_FindThetaD(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(find_theta_D(1e-12));
}
BENCHMARK(BM_FindThetaD);

static void BM_TwoCyclesClosedForm(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(solve_two_cycles_k2(0.3, 0.09));
}
BENCHMARK(BM_TwoCyclesClosedForm);

static void BM_TwoCyclesNumeric(benchmark::State& state) {
  SolverTolerances tol;
  tol.panels = static_cast<int>(state.range(0));
  const auto p = ModelParams::from_activities(0.3, 0.09, 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(solve_two_cycles_numeric(p, tol));
}
BENCHMARK(BM_TwoCyclesNumeric)->RangeMultiplier(4)->Range(256, 16384);

static void BM_QuadraticOracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(quadratic_coeffs_oracle(0.7, 1.3));
}
BENCHMARK(BM_QuadraticOracle);

static void BM_ScanGrid(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const GridSpec grid{{0.05, 3.0, n}, {0.05, 3.0, n}};
  for (auto _ : state) benchmark::DoNotOptimize(scan_grid(grid));
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_ScanGrid)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);
