#include <benchmark/benchmark.h>

#include "pottssos/exact_oracle.hpp"
#include "pottssos/periodic_solver.hpp"

using namespace pottssos;

static void BM_ConsistencyGap(benchmark::State& state) {
  const auto p = ModelParams::from_activities(0.3, 0.09);
  const auto [even, odd] = fields_from_cycle(solve_two_cycles_k2(0.3, 0.09).front());
  const auto rule = parity_rule(even, odd);
  const int k = static_cast<int>(state.range(0));
  OracleOptions options;
  options.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(consistency_gap(k, 2, rule, p, options));
}
BENCHMARK(BM_ConsistencyGap)
    ->Args({2, 1})
    ->Args({2, 0})
    ->Args({3, 1})
    ->Args({3, 0})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
