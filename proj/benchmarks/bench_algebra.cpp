#include <benchmark/benchmark.h>

#include "diffgraph/diffset.hpp"
#include "diffgraph/singer.hpp"

using namespace diffgraph;

static void BM_DifferenceProfile(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Group g = build_cyclic(n);
  std::vector<Element> elems;
  for (Element x = 0; elems.size() < static_cast<std::size_t>(state.range(1)); x += 3) elems.push_back(x % n);
  const CandidateSet s(g, elems);
  for (auto _ : state) benchmark::DoNotOptimize(classify_set(s).verdict);
}
BENCHMARK(BM_DifferenceProfile)->Args({39, 7})->Args({1000, 32});

static void BM_Singer(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(singer_set(q).set.size());
}
BENCHMARK(BM_Singer)->Arg(3)->Arg(11)->Arg(29)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
