#include <benchmark/benchmark.h>

#include <random>

#include "matchmod/gf2.hpp"

using matchmod::Gf2Matrix;

namespace {

Gf2Matrix random_square(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rng() & 1) m.set(i, j, true);
  return m;
}

}  // namespace

static void BM_Gf2Multiply(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  Gf2Matrix a = random_square(n, 1), b = random_square(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Gf2Multiply)->Arg(105)->Arg(945);

static void BM_Gf2Rank(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  Gf2Matrix a = random_square(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(a.rank());
}
BENCHMARK(BM_Gf2Rank)->Arg(105)->Arg(945);
