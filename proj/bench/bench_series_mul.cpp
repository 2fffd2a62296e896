// Serial vs OpenMP series multiplication on dense random operands.

#include <random>

#include <benchmark/benchmark.h>

#include "brieskorn/series.hpp"

using brieskorn::Series;

namespace {

// Dense series in `nvars` variables through total degree `degree`.
Series dense(int nvars, int degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  Series out(nvars, degree);
  brieskorn::Exponents e{};
  // Odometer over exponent vectors with total degree <= degree.
  while (true) {
    out.add_term(e, brieskorn::make_rational(num(rng), den(rng)));
    int i = 0;
    while (i < nvars) {
      ++e[static_cast<std::size_t>(i)];
      if (brieskorn::total_degree(e) <= degree) break;
      e[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == nvars) break;
  }
  return out;
}

void BM_MultiplySerial(benchmark::State& state) {
  Series a = dense(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 1);
  Series b = dense(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(Series::multiply_serial(a, b));
  state.counters["terms"] = static_cast<double>(a.terms().size());
}

void BM_MultiplyParallel(benchmark::State& state) {
  Series a = dense(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 1);
  Series b = dense(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(Series::multiply_parallel(a, b));
  state.counters["terms"] = static_cast<double>(a.terms().size());
}

}  // namespace

BENCHMARK(BM_MultiplySerial)->Args({1, 40})->Args({4, 8})->Args({4, 12})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplyParallel)->Args({1, 40})->Args({4, 8})->Args({4, 12})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
