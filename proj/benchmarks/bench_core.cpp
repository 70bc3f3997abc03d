// microbenchmarks for the hot paths: convolution, circle sampling (transform
// vs per-angle Horner), the adaptive moment integral, the paired recursion,
// box sweeps and exhaustive sign enumeration
#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "disclab/fournier.hpp"
#include "disclab/grids.hpp"
#include "disclab/quadrature.hpp"
#include "disclab/random_series.hpp"
#include "disclab/series.hpp"
#include "disclab/spaces.hpp"

using namespace disclab;

namespace {

CoeffSeries random_poly(std::int64_t degree, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<cplx> c(static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) v = cplx(uni(gen), uni(gen));
  return CoeffSeries(std::move(c));
}

void BM_cauchy_product(benchmark::State& state) {
  const auto deg = state.range(0);
  const CoeffSeries f = random_poly(deg, 1);
  const CoeffSeries g = random_poly(deg, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cauchy_product(f, g));
  }
  state.SetComplexityN(deg);
}
BENCHMARK(BM_cauchy_product)->Range(64, 4096)->Complexity(benchmark::oNSquared);

void BM_sample_circle_transform(benchmark::State& state) {
  const CoeffSeries f = random_poly(state.range(0) - 1, 3);
  const CircleGrid cg(static_cast<int>(2 * state.range(0)));  // power of two: transform path
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_circle(f, 0.9, cg));
  }
}
BENCHMARK(BM_sample_circle_transform)->Range(256, 8192);

void BM_sample_circle_horner(benchmark::State& state) {
  const CoeffSeries f = random_poly(state.range(0) - 1, 3);
  const CircleGrid cg(static_cast<int>(2 * state.range(0) - 1));  // odd: per-angle Horner path
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_circle(f, 0.9, cg));
  }
}
BENCHMARK(BM_sample_circle_horner)->Range(256, 4096);

void BM_beta_log_integral(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(beta_log_integral(n, 1, 2.0));
  }
}
BENCHMARK(BM_beta_log_integral)->Range(1 << 8, 1 << 16);

void BM_fournier_construct(benchmark::State& state) {
  const int steps = static_cast<int>(state.range(0));
  std::vector<cplx> u;
  std::vector<std::int64_t> n;
  for (int k = 0; k < steps; ++k) {
    u.emplace_back(1.0 / (k + 1.0), 0.0);
    n.push_back(std::int64_t{1} << (2 * k));
  }
  const FournierInput in(u, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fournier_construct(in, 256));
  }
}
BENCHMARK(BM_fournier_construct)->DenseRange(6, 14, 4);

void BM_carleson_boxes(benchmark::State& state) {
  const CoeffSeries f = log_kernel_series(0.0, 1024);
  const RadialGrid rg = RadialGrid::geometric_midpoint(12, 4);
  const CircleGrid cg(2048);
  const SampledDensity mu = SampledDensity::derivative_weight(f, 2.0, rg, cg);
  const int maxlevel = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(carleson_constant(mu, maxlevel));
  }
}
BENCHMARK(BM_carleson_boxes)->DenseRange(4, 10, 2);

void BM_khinchine_exhaustive(benchmark::State& state) {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<cplx> c(static_cast<std::size_t>(state.range(0)));
  for (auto& v : c) v = cplx(uni(gen), uni(gen));
  for (auto _ : state) {
    benchmark::DoNotOptimize(khinchine_ratio(c, 1.0));
  }
}
BENCHMARK(BM_khinchine_exhaustive)->DenseRange(10, 18, 4);

}  // namespace

BENCHMARK_MAIN();
