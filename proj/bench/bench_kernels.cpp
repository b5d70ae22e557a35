// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include "proxkit/finite_frame.hpp"
#include "proxkit/morphisms.hpp"
#include "proxkit/proximity.hpp"

using namespace proxkit;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

// Collapse search on the 12-element chain and on 2 x 6.
void BM_Collapse(benchmark::State& state) {
  const FiniteFrame f = state.range(1) == 0 ? chain_frame(12) : product(chain_frame(2), chain_frame(6));
  for (auto _ : state) benchmark::DoNotOptimize(search_proximities(f, exec_of(state)));
  label(state);
}
BENCHMARK(BM_Collapse)->ArgsProduct({{0, 1}, {0, 1}})->Unit(benchmark::kMillisecond);

// Full distributivity scan (no failure, so every triple is visited).
void BM_Distributivity(benchmark::State& state) {
  const FiniteFrame f = boolean_cube(static_cast<std::size_t>(state.range(1)));
  const std::size_t n = f.size();
  std::vector<Elem> meet(n * n), join(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      meet[a * n + b] = f.meet(a, b);
      join[a * n + b] = f.join(a, b);
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(find_distributivity_failure(n, meet, join, exec_of(state)));
  label(state);
}
BENCHMARK(BM_Distributivity)->ArgsProduct({{0, 1}, {4, 5, 6}})->Unit(benchmark::kMillisecond);

// ProxHom enumeration between small frames.
void BM_MapEnum(benchmark::State& state) {
  const auto dom = std::make_shared<const FiniteFrame>(boolean_cube(static_cast<std::size_t>(state.range(1))));
  const auto cod = std::make_shared<const FiniteFrame>(boolean_cube(2));
  const FiniteProxFrame L = order_proximity(dom, "L");
  const FiniteProxFrame M = order_proximity(cod, "M");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_maps(L, M, MapClass::proxhom, exec_of(state)));
  label(state);
}
BENCHMARK(BM_MapEnum)->ArgsProduct({{0, 1}, {2, 3}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
