#include <benchmark/benchmark.h>

#include "matchmod/group.hpp"
#include "matchmod/module.hpp"
#include "matchmod/perm.hpp"

using namespace matchmod;

namespace {

EndAlgebraBasis xi_basis(const GroupAction& xi) {
  const auto& pts = xi.points();
  return end_algebra_basis(xi, [&pts](int x, int y) {
    return cycle_type(compose(pts[x], pts[y])).to_string();
  });
}

}  // namespace

static void BM_EnumerateInvolutions(benchmark::State& state) {
  int two_n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_fpf_involutions(two_n));
}
BENCHMARK(BM_EnumerateInvolutions)->Arg(8)->Arg(10);

static void BM_Decompose(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  GroupAction xi = enumerate_fpf_involutions(2 * n);
  PermModule mod = PermModule::from_action(xi);
  EndAlgebraBasis basis = xi_basis(xi);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(mod, basis));
}
BENCHMARK(BM_Decompose)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
