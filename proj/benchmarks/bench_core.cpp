#include <benchmark/benchmark.h>

#include "corita/examples.hpp"

using namespace corita;

namespace {
const Field QF = Field::rationals();
}

static void BM_rref(benchmark::State& state) {
  std::size_t n = state.range(0);
  Mat m(QF, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, QF.from_long(static_cast<long>((i * 7 + j * 3) % 5) - 2));
  for (auto _ : state) {
    Mat c = m;
    benchmark::DoNotOptimize(rref(c));
  }
}
BENCHMARK(BM_rref)->Arg(8)->Arg(16)->Arg(32);

static void BM_firm_square_m2(benchmark::State& state) {
  Algebra m2 = matrix_algebra(QF, 2);
  for (auto _ : state) benchmark::DoNotOptimize(firm_square(m2));
}
BENCHMARK(BM_firm_square_m2);

static void BM_coseparability_hopf(benchmark::State& state) {
  HopfAlgebra h = cyclic_group_hopf(QF, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hopf_module_coring(h));
}
BENCHMARK(BM_coseparability_hopf)->Arg(2)->Arg(3);

static void BM_example_sweedler(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_example("sweedler-kxk"));
}
BENCHMARK(BM_example_sweedler);

BENCHMARK_MAIN();
