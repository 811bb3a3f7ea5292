#include <benchmark/benchmark.h>

#include <vector>

#include "holefree/generators.hpp"
#include "holefree/holes.hpp"
#include "holefree/invariants.hpp"
#include "holefree/lemma.hpp"
#include "holefree/named_graphs.hpp"
#include "holefree/quasiline.hpp"
#include "holefree/splitting.hpp"

using namespace holefree;

namespace {

std::vector<Graph> random_batch(int n, double p, int count, std::uint64_t seed) {
  std::vector<Graph> out;
  SplitMix64 rng(seed);
  for (int k = 0; k < count; ++k) out.push_back(random_graph(n, p, rng.next()));
  return out;
}

std::vector<Graph> lemma_batch(int alpha, int count, std::uint64_t seed) {
  std::vector<Graph> out;
  SplitMix64 rng(seed);
  for (int k = 0; k < count; ++k) out.push_back(lemma_class_instance(random_attachment_spec(alpha, rng, 3), rng.next()).graph);
  return out;
}

void BM_MaxClique(benchmark::State& state) {
  const auto graphs = random_batch(static_cast<int>(state.range(0)), 0.5, 16, 1);
  for (auto _ : state) {
    for (const Graph& g : graphs) benchmark::DoNotOptimize(max_clique(g));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(graphs.size()));
}
BENCHMARK(BM_MaxClique)->Arg(16)->Arg(32)->Arg(48)->Arg(64);

void BM_ChromaticNumber(benchmark::State& state) {
  const auto graphs = random_batch(static_cast<int>(state.range(0)), 0.5, 16, 2);
  for (auto _ : state) {
    for (const Graph& g : graphs) benchmark::DoNotOptimize(chromatic_number(g));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(graphs.size()));
}
BENCHMARK(BM_ChromaticNumber)->Arg(12)->Arg(20)->Arg(28)->Unit(benchmark::kMicrosecond);

void BM_HoleRange(benchmark::State& state) {
  const auto graphs = random_batch(static_cast<int>(state.range(0)), 0.3, 16, 3);
  for (auto _ : state) {
    for (const Graph& g : graphs) benchmark::DoNotOptimize(hole_free_in_range(g, 4, 9));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(graphs.size()));
}
BENCHMARK(BM_HoleRange)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMicrosecond);

void BM_OddHoleOnLemmaInstances(benchmark::State& state) {
  const auto graphs = lemma_batch(static_cast<int>(state.range(0)), 8, 4);
  for (auto _ : state) {
    for (const Graph& g : graphs) benchmark::DoNotOptimize(has_odd_hole(g));
  }
}
BENCHMARK(BM_OddHoleOnLemmaInstances)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMicrosecond);

void BM_QuasiLine(benchmark::State& state) {
  const auto graphs = lemma_batch(static_cast<int>(state.range(0)), 16, 5);
  for (auto _ : state) {
    for (const Graph& g : graphs) benchmark::DoNotOptimize(is_quasi_line(g));
  }
}
BENCHMARK(BM_QuasiLine)->Arg(3)->Arg(5)->Unit(benchmark::kMicrosecond);

void BM_LemmaPipeline(benchmark::State& state) {
  const auto graphs = lemma_batch(static_cast<int>(state.range(0)), 8, 6);
  for (auto _ : state) {
    for (const Graph& g : graphs) benchmark::DoNotOptimize(lemma_pipeline(g));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(graphs.size()));
}
BENCHMARK(BM_LemmaPipeline)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Splittable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto graphs = random_batch(n, 0.5, 8, 7);
  for (auto _ : state) {
    for (const Graph& g : graphs) benchmark::DoNotOptimize(is_splittable(g, 2, 3));
  }
}
BENCHMARK(BM_Splittable)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_MainTheoremOnC7Join(benchmark::State& state) {
  // C_7 joined with K_k: chi = 3 + k, so every (s, t) search runs.
  const Graph g = join(cycle_graph(7), complete_graph(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(verify_main_theorem(g));
}
BENCHMARK(BM_MainTheoremOnC7Join)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
