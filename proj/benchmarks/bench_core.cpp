#include <benchmark/benchmark.h>

#include "pk/canonical.hpp"
#include "pk/field.hpp"
#include "pk/fixtures.hpp"
#include "pk/matrix.hpp"

namespace {

void bench_canonical_form(benchmark::State& state) {
  auto p = pk::fixture("wedge");
  for (auto _ : state) benchmark::DoNotOptimize(pk::canonical_form(p));
}
BENCHMARK(bench_canonical_form);

void bench_rref_rational(benchmark::State& state) {
  pk::RationalField q;
  int n = static_cast<int>(state.range(0));
  pk::Matrix<pk::RationalField> m(q, n, n);
  uint64_t seed = 99;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
      m.at(i, j) = q.from_long(static_cast<long>(seed % 7) - 3);
    }
  for (auto _ : state) benchmark::DoNotOptimize(pk::rref(m).rank);
}
BENCHMARK(bench_rref_rational)->Arg(16)->Arg(48);

void bench_rref_gf2(benchmark::State& state) {
  pk::PrimeField f(2);
  int n = static_cast<int>(state.range(0));
  pk::Matrix<pk::PrimeField> m(f, n, n);
  uint64_t seed = 99;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
      m.at(i, j) = static_cast<uint32_t>(seed & 1);
    }
  for (auto _ : state) benchmark::DoNotOptimize(pk::rref(m).rank);
}
BENCHMARK(bench_rref_gf2)->Arg(64)->Arg(128);

} // namespace

BENCHMARK_MAIN();
