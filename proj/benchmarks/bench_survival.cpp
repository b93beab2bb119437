#include <benchmark/benchmark.h>

#include "decaylab/survival.hpp"
#include "decaylab/tailfit.hpp"
#include "models.hpp"

using namespace decaylab;

static void BM_filon_build(benchmark::State& state) {
  const Model m = bench::lorentzian();
  for (auto _ : state) {
    ContinuumAmplitude amp(m);
    benchmark::DoNotOptimize(amp.panel_count());
  }
}
BENCHMARK(BM_filon_build)->Unit(benchmark::kMillisecond);

static void BM_filon_eval(benchmark::State& state) {
  const Model m = bench::lorentzian();
  const ContinuumAmplitude amp(m);
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(amp(t));
    t = t > 20.0 ? 0.0 : t + 0.37;
  }
  state.counters["panels"] = static_cast<double>(amp.panel_count());
}
BENCHMARK(BM_filon_eval);

static void BM_cut_amplitude(benchmark::State& state) {
  const Model m = bench::case2();
  for (auto _ : state) benchmark::DoNotOptimize(cut_amplitude(m, 50.0));
}
BENCHMARK(BM_cut_amplitude);

static void BM_decomposed_series(benchmark::State& state) {
  const Model m = bench::case2();
  const auto times = log_grid(0.1, 1000.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(survival_decomposed(m, times));
}
BENCHMARK(BM_decomposed_series)->Arg(16)->Arg(128)->Unit(benchmark::kMillisecond);
