#include <random>

#include "benchmark/benchmark.h"
#include "framekit/feichtinger.hpp"
#include "framekit/sequences.hpp"

namespace {

framekit::ExplicitGramianProvider random_frame(std::size_t dimension, std::size_t count,
                                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::vector<std::vector<framekit::Complex>> vectors(count);
  for (auto& v : vectors) {
    v.resize(dimension);
    for (auto& x : v) x = framekit::Complex(gauss(rng), gauss(rng));
  }
  return framekit::ExplicitGramianProvider(
      framekit::ExplicitSequence(dimension, std::move(vectors)).normalize());
}

framekit::EnemyGraph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  framekit::EnemyGraph graph(n, 0.5);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      if (coin(rng) < p) graph.add_edge(i, j);
    }
  }
  return graph;
}

void BM_EnemyGraph(benchmark::State& state) {
  const auto provider = random_frame(16, static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(framekit::enemy_graph(provider, state.range(0), 0.5));
  }
}

void BM_GreedyPartition(benchmark::State& state) {
  const auto graph = random_graph(static_cast<std::size_t>(state.range(0)), 0.1, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(framekit::greedy_partition(graph));
  }
}

void BM_PartitionReport(benchmark::State& state) {
  const auto provider = random_frame(12, 64, 3);
  const std::vector<std::size_t> sizes{16, 32, 64};
  for (auto _ : state) {
    benchmark::DoNotOptimize(framekit::separated_partition_report(provider, 64, 0.5, sizes));
  }
}

}  // namespace

BENCHMARK(BM_EnemyGraph)->Arg(64)->Arg(128);
BENCHMARK(BM_GreedyPartition)->Arg(100)->Arg(200);
BENCHMARK(BM_PartitionReport);
