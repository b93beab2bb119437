#include <benchmark/benchmark.h>

#include <cmath>

#include "decaylab/pvcalc.hpp"
#include "decaylab/quadrature.hpp"
#include "models.hpp"

using namespace decaylab;

static void BM_sigma_closed(benchmark::State& state) {
  const Model m = bench::lorentzian();
  double x = -3.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hilbert_full(m, x, TransformMethod::ClosedForm));
    x = x > 3.0 ? -3.0 : x + 0.01;
  }
}
BENCHMARK(BM_sigma_closed);

static void BM_sigma_quadrature(benchmark::State& state) {
  const Model m = bench::lorentzian();
  double x = -3.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hilbert_full(m, x, TransformMethod::Quadrature));
    x = x > 3.0 ? -3.0 : x + 0.01;
  }
}
BENCHMARK(BM_sigma_quadrature);

static void BM_sigma_bar_half_line(benchmark::State& state) {
  const Model m = bench::case2();
  const auto method = state.range(0) ? TransformMethod::Quadrature : TransformMethod::ClosedForm;
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_half(m, 0.7, method));
}
BENCHMARK(BM_sigma_bar_half_line)->Arg(0)->Arg(1);

static void BM_xi_continued(benchmark::State& state) {
  const Model m = bench::case1();
  for (auto _ : state) benchmark::DoNotOptimize(xi_eval(m, {0.8, -0.3}, Sheet::Continued));
}
BENCHMARK(BM_xi_continued);

static void BM_gauss_legendre(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(quad::gauss_legendre(n));
}
BENCHMARK(BM_gauss_legendre)->RangeMultiplier(4)->Range(16, 4096);

static void BM_gk_adaptive(benchmark::State& state) {
  auto f = [](double x) { return 1.0 / (1.0 + x * x); };
  for (auto _ : state) benchmark::DoNotOptimize(quad::integrate(f, -INFINITY, INFINITY));
}
BENCHMARK(BM_gk_adaptive);
