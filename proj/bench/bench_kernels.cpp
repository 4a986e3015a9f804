#include <benchmark/benchmark.h>

#include <random>

#include "bil/kernels/dense.hpp"
#include "bil/kernels/minors.hpp"
#include "bil/ring/ring_context.hpp"

using namespace bil::kernels;

static DenseMatrix make_matrix(std::size_t n) {
  std::mt19937_64 rng(n);
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<Scalar>(rng() % 32003);
  return m;
}

static void BM_rref(benchmark::State& state, Exec exec) {
  Field F(32003);
  auto base = make_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    DenseMatrix m = base;
    benchmark::DoNotOptimize(rref(m, F, exec));
  }
}
BENCHMARK_CAPTURE(BM_rref, serial, Exec::serial)->Arg(64)->Arg(256)->Arg(512);
BENCHMARK_CAPTURE(BM_rref, parallel, Exec::parallel)->Arg(64)->Arg(256)->Arg(512);

static void BM_minors(benchmark::State& state, Exec exec) {
  auto R = bil::ring::RingContext::p3();
  std::mt19937_64 rng(1);
  const int cols = static_cast<int>(state.range(0));
  PolyMatrix m(4, std::vector<Polynomial>(cols));
  for (auto& r : m)
    for (auto& e : r) e = R->random_form(1, rng);
  for (auto _ : state) benchmark::DoNotOptimize(minors(m, 3, R->field(), exec));
}
BENCHMARK_CAPTURE(BM_minors, serial, Exec::serial)->Arg(6)->Arg(10);
BENCHMARK_CAPTURE(BM_minors, parallel, Exec::parallel)->Arg(6)->Arg(10);

BENCHMARK_MAIN();
