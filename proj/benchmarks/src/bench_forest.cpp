#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "dyncx/connectivity/forest.hpp"

namespace {

using dyncx::conn::DynamicForest;

// Path 0-1-...-(N-1); each iteration cuts a random path edge and links it back.
void BM_ForestCutLink(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  DynamicForest f(n, 1);
  for (std::size_t i = 0; i + 1 < n; ++i) f.link(i, i + 1);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, n - 2);
  f.reset_probe_stats();
  for (auto _ : state) {
    const std::size_t i = pick(rng);
    f.cut(i, i + 1);
    f.link(i, i + 1);
  }
  state.counters["max_op_probes"] = static_cast<double>(f.max_op_probes());
  state.counters["budget"] = static_cast<double>(f.probe_budget());
}

void BM_ForestConnected(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  DynamicForest f(n, 1);
  for (std::size_t i = 0; i + 1 < n; i += 2) f.link(i, i + 1);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> node(0, n - 1);
  for (auto _ : state) benchmark::DoNotOptimize(f.connected(node(rng), node(rng)));
}

BENCHMARK(BM_ForestCutLink)->RangeMultiplier(4)->Range(64, 16384);
BENCHMARK(BM_ForestConnected)->RangeMultiplier(4)->Range(64, 16384);

}  // namespace
