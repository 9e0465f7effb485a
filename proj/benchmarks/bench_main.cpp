#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "mutalab/catalog.hpp"
#include "mutalab/loops.hpp"

using namespace mutalab;

namespace {

void BM_Mutate(benchmark::State& state) {
  const ValuedQuiver q = build("E8_11");
  Vertex k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mutate(q, k));
    k = (k + 1) % q.rank();
  }
}
BENCHMARK(BM_Mutate);

void BM_MutateByRules(benchmark::State& state) {
  const ValuedQuiver q = build("E8_11");
  Vertex k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mutate_by_rules(q, k));
    k = (k + 1) % q.rank();
  }
}
BENCHMARK(BM_MutateByRules);

// Witness search between two relabellings of the same quiver.
void BM_SymmetryWitness(benchmark::State& state) {
  const ValuedQuiver q = build("A_n", {static_cast<int>(state.range(0))});
  std::vector<Vertex> img(static_cast<std::size_t>(q.rank()));
  std::iota(img.begin(), img.end(), 0);
  std::mt19937 rng(1);
  std::shuffle(img.begin(), img.end(), rng);
  const ValuedQuiver p = permute(q, Permutation(img));
  for (auto _ : state) benchmark::DoNotOptimize(symmetry_witness(q, p));
}
BENCHMARK(BM_SymmetryWitness)->Arg(4)->Arg(8)->Arg(12);

void BM_EnumerateClass(benchmark::State& state) {
  const ValuedQuiver q = build("X6");
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_class(q, {}, threads).size());
}
BENCHMARK(BM_EnumerateClass)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_EnumerateA(benchmark::State& state) {
  const ValuedQuiver q = build("A_n", {static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_class(q).size());
}
BENCHMARK(BM_EnumerateA)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_SearchGlobalLoops(benchmark::State& state) {
  const ExchangeGraph g = enumerate_class(build("Table14_row", {1}));
  const auto len = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search_global_loops(g, len).size());
}
BENCHMARK(BM_SearchGlobalLoops)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_SearchThreads(benchmark::State& state) {
  const ExchangeGraph g = enumerate_class(build("Q_c_t", {2}));
  const SearchOptions opts{10'000'000, static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(search_global_loops(g, 8, opts).size());
}
BENCHMARK(BM_SearchThreads)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
