#include <benchmark/benchmark.h>

#include "rcfd/combinators.hpp"
#include "rcfd/gf.hpp"
#include "rcfd/io.hpp"
#include "rcfd/oracle.hpp"
#include "rcfd/polyfield.hpp"
#include "rcfd/solver.hpp"

namespace {

void BM_BuildField(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rcfd::build_field(q));
  }
}
BENCHMARK(BM_BuildField)->Arg(16)->Arg(81)->Arg(256);

void BM_PrimePowerDesign(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(rcfd::prime_power_design(3, 2, 2));
  }
}
BENCHMARK(BM_PrimePowerDesign);

void BM_Generate(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  const int n = static_cast<int>(state.range(2));
  const int q = static_cast<int>(state.range(3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rcfd::generate(k, m, n, q));
  }
}
BENCHMARK(BM_Generate)
    ->Args({8, 48, 48, 2})
    ->Args({3, 12, 18, 6})
    ->Args({2, 30, 50, 10})
    ->Args({2, 48, 48, 12});

void BM_VerifyDesign(benchmark::State& state) {
  const rcfd::Design d = rcfd::generate(8, 48, 48, 2).design;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rcfd::verify_design(d));
  }
}
BENCHMARK(BM_VerifyDesign);

void BM_KroneckerLarge(benchmark::State& state) {
  const rcfd::Design a = rcfd::prime_power_design(5, 1, 1);
  const rcfd::Design b = rcfd::prime_power_design(7, 1, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rcfd::kronecker(a, b));
  }
}
BENCHMARK(BM_KroneckerLarge);

void BM_OracleNonexistence(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rcfd::exhaustive_exists(2, 2, n, 2));
  }
}
BENCHMARK(BM_OracleNonexistence)->Arg(6)->Arg(10);

void BM_WriteReadText(benchmark::State& state) {
  const rcfd::Design d = rcfd::generate(4, 36, 36, 6).design;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rcfd::read_design(rcfd::write_design(d, rcfd::Format::Text)));
  }
}
BENCHMARK(BM_WriteReadText);

}  // namespace

BENCHMARK_MAIN();
