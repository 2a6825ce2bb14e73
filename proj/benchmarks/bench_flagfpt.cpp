#include <benchmark/benchmark.h>

#include "flagfpt/fpt_engine.hpp"
#include "flagfpt/lattices.hpp"
#include "flagfpt/root_system.hpp"

using namespace flagfpt;

static void BM_E8PositiveRoots(benchmark::State& state) {
  const auto cartan = cartan_matrix(make_root_system_type('E', 8));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_positive_roots(cartan));
}
BENCHMARK(BM_E8PositiveRoots);

static void BM_YoungChain(benchmark::State& state) {
  const auto spec = make_young_spec(8, {2, 3, 5, 7});
  for (auto _ : state) {
    const auto p = build_young(spec);
    benchmark::DoNotOptimize(principal_chain(p).length());
  }
}
BENCHMARK(BM_YoungChain)->Unit(benchmark::kMillisecond);

static void BM_YoungFastSuccessors(benchmark::State& state) {
  const auto spec = make_young_spec(8, {2, 3, 5, 7});
  for (auto _ : state) {
    Element x{1, 2, 3, 4, 5, 6, 7};
    int steps = 1;
    while (x != Element{7, 8}) {
      x = fast_successor_young(x, spec);
      ++steps;
    }
    benchmark::DoNotOptimize(steps);
  }
}
BENCHMARK(BM_YoungFastSuccessors);

static void BM_Table2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(table2());
}
BENCHMARK(BM_Table2)->Unit(benchmark::kMillisecond);

static void BM_E7OrbitPoset(benchmark::State& state) {
  const RootSystem e7(make_root_system_type('E', 7));
  for (auto _ : state) {
    const auto p = build_minuscule_weightposet(e7, 7);
    benchmark::DoNotOptimize(principal_chain(p).length());
  }
}
BENCHMARK(BM_E7OrbitPoset)->Unit(benchmark::kMillisecond);

static void BM_EvaluateStrict(benchmark::State& state) {
  const auto q = make_query(make_root_system_type('C', 6), {1});
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(q, EvalMode::strict));
}
BENCHMARK(BM_EvaluateStrict);
BENCHMARK_MAIN();
