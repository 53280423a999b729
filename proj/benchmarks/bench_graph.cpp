#include <benchmark/benchmark.h>

#include "diffgraph/bigraph.hpp"
#include "diffgraph/group_spec.hpp"

using namespace diffgraph;

static void BM_BuildAndDiameterGamma1(benchmark::State& state) {
  const Group g = build_semidirect(5, 8, 2);
  const CandidateSet s(g, parse_element_list(g, "1,b,b^4,ba,ba^-1b^2,ab^-1,bab^2"));
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    const BiGraph graph = build_gm(g, s, m);
    benchmark::DoNotOptimize(diameter(graph).diameter);
  }
}
BENCHMARK(BM_BuildAndDiameterGamma1)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMicrosecond);

static void BM_DiameterSinger(benchmark::State& state) {
  // Z_133 with the perfect 12-set, m copies
  const Group g = build_cyclic(133);
  const CandidateSet s(g, {0, 1, 3, 12, 20, 34, 38, 81, 88, 94, 104, 109});
  const BiGraph graph = build_gm(g, s, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(diameter(graph).diameter);
}
BENCHMARK(BM_DiameterSinger)->Arg(1)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_Repeats(benchmark::State& state) {
  const Group z13 = build_cyclic(13);
  const BiGraph graph = build_gm(z13, CandidateSet(z13, {0, 1, 3, 9}), 3);
  for (auto _ : state) benchmark::DoNotOptimize(find_repeats(graph, 0).repeats.size());
}
BENCHMARK(BM_Repeats);
