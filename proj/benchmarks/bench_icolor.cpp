#include <benchmark/benchmark.h>

#include "icolor/constructor.hpp"
#include "icolor/obstruction.hpp"
#include "icolor/oracle.hpp"
#include "icolor/verifier.hpp"

namespace {

// Sizes with gcd(m+1, n+1) = 1 and m = n - 1.
void BM_StarColors(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(icolor::extend_star_colors(n - 1, n));
  state.SetComplexityN(n);
}
BENCHMARK(BM_StarColors)->RangeMultiplier(10)->Range(10, 1'000'000)->Complexity();

void BM_ExtendToK1mn(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(icolor::extend_to_k1mn(n - 1, n));
  state.SetComplexityN(static_cast<long>(n) * n);
}
BENCHMARK(BM_ExtendToK1mn)->RangeMultiplier(4)->Range(8, 512)->Complexity();

void BM_Verify(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const icolor::EdgeColoring c = icolor::extend_to_k1mn(n - 1, n);
  for (auto _ : state) benchmark::DoNotOptimize(icolor::verify(c));
  state.SetComplexityN(static_cast<long>(c.graph().edge_count()));
}
BENCHMARK(BM_Verify)->RangeMultiplier(4)->Range(8, 512)->Complexity();

// gcd(m+1, 3m+3) = m+1 > 1, so every pair is obstructed.
void BM_ParityCertificate(benchmark::State& state) {
  std::int64_t m = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(icolor::parity_certificate(m, 3 * m + 2));
    m = m % 100'000 + 1;
  }
}
BENCHMARK(BM_ParityCertificate);

void BM_SearchFeasibleRange(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  const int b = static_cast<int>(state.range(1));
  const int c = static_cast<int>(state.range(2));
  const auto g = icolor::build_graph({a, b, c});
  for (auto _ : state) benchmark::DoNotOptimize(icolor::feasible_t_range(g));
}
BENCHMARK(BM_SearchFeasibleRange)
    ->Args({1, 1, 2})
    ->Args({1, 2, 3})
    ->Args({2, 2, 2})
    ->Args({1, 3, 4})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
