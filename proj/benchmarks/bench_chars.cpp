#include <benchmark/benchmark.h>

#include "matchmod/chars.hpp"

using namespace matchmod;

static void BM_CharacterTable(benchmark::State& state) {
  int d = static_cast<int>(state.range(0));
  auto types = partitions(d);
  for (auto _ : state) {
    CharacterEvaluator eval;
    std::int64_t acc = 0;
    for (const auto& lambda : types)
      for (const auto& rho : types) acc += eval.mn_character(lambda, rho);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_CharacterTable)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_PermCharacterXi(benchmark::State& state) {
  int two_n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(perm_character_xi(two_n));
}
BENCHMARK(BM_PermCharacterXi)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
