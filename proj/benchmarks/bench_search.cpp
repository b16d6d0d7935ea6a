#include <benchmark/benchmark.h>

#include "wudcr/gadgets.hpp"
#include "wudcr/logicengine.hpp"
#include "wudcr/placement.hpp"

namespace {

// Exhaustive search on the radius-r hexagon tree.
void BM_HexagonSearch(benchmark::State& state) {
  const auto g = wudcr::hexagon_gadget(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wudcr::embed_search(g.tree));
}
BENCHMARK(BM_HexagonSearch)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

void BM_BranchingSearch(benchmark::State& state) {
  const auto g = wudcr::branching_gadget();
  wudcr::SearchOptions opt;
  opt.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wudcr::embed_search(g.tree, opt));
}
BENCHMARK(BM_BranchingSearch)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime()->Iterations(1);

void BM_DecideEngine(benchmark::State& state) {
  const auto f = wudcr::CnfFormula::make(3, {{1, 2, 3}, {-1, -2, 3}, {1, -3}});
  for (auto _ : state) benchmark::DoNotOptimize(wudcr::decide_engine(f));
}
BENCHMARK(BM_DecideEngine)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
