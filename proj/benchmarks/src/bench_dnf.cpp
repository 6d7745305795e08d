#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <vector>

#include "dyncx/dnf/counters.hpp"

namespace {

using dyncx::VarSet;
using dyncx::dnf::Clause;
using dyncx::dnf::DnfInstance;

// x0 sits in every clause and stays false, so the rescan baseline never
// stops early.
DnfInstance pinned(std::size_t m, std::size_t w, std::mt19937_64& rng) {
  const std::size_t n = std::max<std::size_t>(16, m / 4);
  DnfInstance inst;
  inst.num_vars = n;
  inst.assignment.assign(n, false);
  std::vector<std::uint32_t> vars(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) vars[i] = static_cast<std::uint32_t>(i + 1);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t j = 0; j < m; ++j) {
    std::shuffle(vars.begin(), vars.end(), rng);
    Clause c{{0, true}};
    for (std::size_t i = 0; i + 1 < w; ++i) c.push_back({vars[i], coin(rng)});
    inst.clauses.push_back(std::move(c));
  }
  return inst;
}

std::vector<VarSet> flips(std::size_t n, std::size_t count, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> var(1, n - 1);
  std::bernoulli_distribution coin(0.5);
  std::vector<VarSet> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back({var(rng), coin(rng)});
  return out;
}

template <class Eval>
void run(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const auto m = static_cast<std::size_t>(state.range(0));
  DnfInstance inst = pinned(m, 3, rng);
  const auto stream = flips(inst.num_vars, 4096, rng);
  Eval eval(inst);
  std::size_t i = 0;
  for (auto _ : state) {
    const VarSet& u = stream[i++ % stream.size()];
    benchmark::DoNotOptimize(eval.flip(u.var, u.bit));
  }
  state.counters["probes/op"] =
      benchmark::Counter(static_cast<double>(eval.probes()), benchmark::Counter::kAvgIterations);
}

void BM_NaiveRescan(benchmark::State& state) { run<dyncx::dnf::NaiveDnfEvaluator>(state); }
void BM_ClauseCounters(benchmark::State& state) { run<dyncx::dnf::ClauseCounters>(state); }

BENCHMARK(BM_NaiveRescan)->RangeMultiplier(4)->Range(64, 16384);
BENCHMARK(BM_ClauseCounters)->RangeMultiplier(4)->Range(64, 16384);

}  // namespace
