#include <algorithm>
#include <random>

#include "commands.hpp"
#include "dyncx/connectivity/forest.hpp"
#include "dyncx/dnf/counters.hpp"

namespace dyncx::cli {
namespace {

// Every clause carries x0, which stays false, so a from-scratch rescan has to
// visit all m clauses on every flip. Flips only touch x1..x{n-1}.
dnf::DnfInstance pinned_dnf(std::size_t n, std::size_t m, std::size_t w, std::mt19937_64& rng) {
  dnf::DnfInstance inst;
  inst.num_vars = n;
  inst.assignment.resize(n);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 1; i < n; ++i) inst.assignment[i] = coin(rng);
  std::vector<std::uint32_t> vars(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) vars[i] = static_cast<std::uint32_t>(i + 1);
  for (std::size_t j = 0; j < m; ++j) {
    std::shuffle(vars.begin(), vars.end(), rng);
    dnf::Clause c{{0, true}};
    for (std::size_t i = 0; i + 1 < std::min(w, n); ++i) c.push_back({vars[i], coin(rng)});
    inst.clauses.push_back(std::move(c));
  }
  return inst;
}

}  // namespace

Report cmd_bench(const BenchArgs& args, const Options& opt) {
  std::mt19937_64 rng(opt.seed);
  Report report("bench");
  Json dnf_rows = Json::array();
  for (std::size_t m : args.sizes) {
    const std::size_t n = std::max<std::size_t>(16, m / 4);
    dnf::DnfInstance inst = pinned_dnf(n, m, args.width, rng);
    UpdateStream stream = random_flips(n - 1, args.updates, rng);
    for (Update& u : stream) ++std::get<VarSet>(u).var;
    dnf::NaiveDnfEvaluator naive(inst);
    dnf::ClauseCounters counters(inst);
    const std::uint64_t naive0 = naive.probes(), counters0 = counters.probes();
    Stopwatch tn;
    for (const Update& u : stream) naive.apply(u);
    const double naive_ms = tn.ms();
    Stopwatch tc;
    for (const Update& u : stream) counters.apply(u);
    const double counters_ms = tc.ms();
    const bool agree = naive.answer() == counters.answer();
    const double k = static_cast<double>(std::max<std::size_t>(1, stream.size()));
    Json row;
    row["m"] = m;
    row["n"] = n;
    row["w"] = args.width;
    row["naive_probes"] = static_cast<double>(naive.probes() - naive0) / k;
    row["counter_probes"] = static_cast<double>(counters.probes() - counters0) / k;
    row["naive_ns"] = naive_ms * 1e6 / k;
    row["counter_ns"] = counters_ms * 1e6 / k;
    dnf_rows.push_back(row);
    report.flag("final_answers_agree_m" + std::to_string(m), agree);
  }
  report.body()["dnf"] = dnf_rows;

  Json forest_rows = Json::array();
  for (std::size_t n : args.sizes) {
    conn::DynamicForest f(n, opt.seed);
    std::uniform_int_distribution<std::size_t> node(0, n - 1);
    Stopwatch t;
    std::size_t ops = 0;
    std::vector<Edge> tree;
    for (std::size_t i = 0; i < args.updates; ++i, ++ops) {
      if (!tree.empty() && (i % 3 == 2)) {
        std::uniform_int_distribution<std::size_t> pick(0, tree.size() - 1);
        std::size_t p = pick(rng);
        f.cut(tree[p].u, tree[p].v);
        tree[p] = tree.back();
        tree.pop_back();
      } else {
        std::size_t u = node(rng), v = node(rng);
        if (f.link(u, v) == conn::DynamicForest::LinkResult::kOk) tree.push_back({u, v});
      }
      f.connected(node(rng), node(rng));
    }
    const double ms = t.ms();
    Json row;
    row["N"] = n;
    row["ops"] = ops;
    row["max_op_probes"] = f.max_op_probes();
    row["budget"] = f.probe_budget();
    row["ns_per_op"] = ms * 1e6 / static_cast<double>(std::max<std::size_t>(1, ops));
    forest_rows.push_back(row);
    report.flag("forest_budget_N" + std::to_string(n), f.max_op_probes() <= f.probe_budget());
  }
  report.body()["forest"] = forest_rows;
  return report;
}

}  // namespace dyncx::cli
