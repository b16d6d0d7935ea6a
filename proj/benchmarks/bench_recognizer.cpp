#include <benchmark/benchmark.h>

#include <random>

#include "wudcr/graph.hpp"
#include "wudcr/recognizer.hpp"

namespace {

void BM_Decide(benchmark::State& state) {
  std::mt19937_64 rng(7002);
  const wudcr::Tree t = wudcr::random_caterpillar(static_cast<int>(state.range(0)), 6, rng);
  const auto mode = state.range(1) == 0 ? wudcr::Mode::kPaperPrefix : wudcr::Mode::kWindow;
  for (auto _ : state) benchmark::DoNotOptimize(wudcr::decide(t, mode));
  state.SetComplexityN(state.range(0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Decide)
    ->ArgsProduct({benchmark::CreateRange(1 << 10, 1 << 20, 4), {0, 1}})
    ->Unit(benchmark::kMicrosecond)
    ->Complexity(benchmark::oN);

void BM_Realize(benchmark::State& state) {
  std::mt19937_64 rng(7003);
  const wudcr::Tree t = wudcr::random_caterpillar(static_cast<int>(state.range(0)), 4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(wudcr::realize_caterpillar(t));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Realize)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Unit(benchmark::kMicrosecond)->Complexity();

}  // namespace
