#include <benchmark/benchmark.h>

#include "decaylab/oracle.hpp"
#include "decaylab/spectral.hpp"
#include "models.hpp"

using namespace decaylab;

static void BM_poles_lorentzian(benchmark::State& state) {
  const Model m = bench::lorentzian();
  for (auto _ : state) benchmark::DoNotOptimize(poles_with_weights(m));
}
BENCHMARK(BM_poles_lorentzian);

static void BM_poles_half_line(benchmark::State& state) {
  const Model m = bench::case2();
  for (auto _ : state) benchmark::DoNotOptimize(poles_with_weights(m));
}
BENCHMARK(BM_poles_half_line);

static void BM_bound_state(benchmark::State& state) {
  const Model m = bench::case1();
  for (auto _ : state) benchmark::DoNotOptimize(bound_state(m));
}
BENCHMARK(BM_bound_state);

static void BM_completeness(benchmark::State& state) {
  const Model m = bench::case1();
  for (auto _ : state) benchmark::DoNotOptimize(completeness(m));
}
BENCHMARK(BM_completeness)->Unit(benchmark::kMillisecond);

// dense symmetric eigensolve dominates the oracle
static void BM_oracle_diagonalize(benchmark::State& state) {
  const Model m = bench::lorentzian();
  const auto dm = discretize(m, static_cast<int>(state.range(0)), 50.0);
  for (auto _ : state) benchmark::DoNotOptimize(diagonalize(dm));
}
BENCHMARK(BM_oracle_diagonalize)->Arg(250)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);
