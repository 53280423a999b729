#include <benchmark/benchmark.h>

#include "diffgraph/search.hpp"

using namespace diffgraph;

static void BM_SearchCyclic(benchmark::State& state) {
  const Group g = build_cyclic(static_cast<std::size_t>(state.range(0)));
  SearchConfig c;
  c.size = 7;
  c.prune = state.range(1) != 0;
  for (auto _ : state) {
    auto out = enumerate_covering_sets(g, c);
    benchmark::DoNotOptimize(out.found.size());
    state.counters["examined"] = static_cast<double>(out.candidates_examined);
  }
}
BENCHMARK(BM_SearchCyclic)->Args({39, 1})->Args({42, 1})->Args({42, 0})->Unit(benchmark::kMillisecond);

static void BM_SearchGamma1Inverse(benchmark::State& state) {
  const Group g = build_semidirect(5, 8, 2);
  SearchConfig c;
  c.size = 7;
  c.require_inverse_covering = true;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_covering_sets(g, c).found.size());
}
BENCHMARK(BM_SearchGamma1Inverse)->Unit(benchmark::kMillisecond);

static void BM_SearchWorkers(benchmark::State& state) {
  const Group g = build_cyclic(42);
  SearchConfig c;
  c.size = 7;
  c.workers = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_covering_sets(g, c).candidates_examined);
}
BENCHMARK(BM_SearchWorkers)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
