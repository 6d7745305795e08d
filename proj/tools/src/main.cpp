#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

void add_stream(CLI::App* cmd, dyncx::cli::StreamSource& src) {
  auto* file = cmd->add_option("--updates", src.path, "update stream file");
  auto* rnd = cmd->add_option("--random", src.random, "generate N random updates from --seed");
  file->excludes(rnd);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace dyncx::cli;
  CLI::App app{"dyncx: dynamic verifiers, reductions and oracle checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--seed", opt.seed, "seed for every randomized choice")->capture_default_str();
  auto* json = app.add_flag("--json", "JSON report (default)");
  auto* table = app.add_flag("--table", opt.table, "plain-text table report");
  json->excludes(table);
  app.add_flag("--timing", opt.timing, "include wall-clock time in the report");

  EvalArgs eval;
  auto* c_eval = app.add_subcommand("eval", "evaluate a DNF under an update stream");
  c_eval->add_option("--in", eval.input, "DNF file")->required();
  add_stream(c_eval, eval.stream);
  c_eval->add_option("--algo", eval.algo, "naive or counters")->capture_default_str();
  c_eval->add_flag("--check", eval.check, "replay the brute-force oracle");

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify", "run a verifier/prover protocol");
  c_verify->add_option("--problem", verify.problem, "dnf, conn, kconn or spanning-forest")->required();
  c_verify->add_option("--in", verify.input, "instance file")->required();
  add_stream(c_verify, verify.stream);
  c_verify->add_option("--prover", verify.prover, "honest, maximizing, random or adversarial:<name>")
      ->capture_default_str();
  c_verify->add_option("--k", verify.k, "k for kconn (overrides the file)");
  c_verify->add_option("--oracle", verify.oracle, "spanning-forest subroutine: rebuild or verifier")
      ->capture_default_str();

  ReduceArgs reduce;
  auto* c_reduce = app.add_subcommand("reduce", "check an all-white reduction step by step");
  c_reduce->add_option("--target", reduce.target, "maxflow, subconn, diameter, streach, countreach, countscc")
      ->required();
  c_reduce->add_option("--in", reduce.input, "all-white file")->required();
  add_stream(c_reduce, reduce.stream);

  SatArgs sat;
  auto* c_sat = app.add_subcommand("sat", "decide CNF satisfiability through dynamic all-white");
  c_sat->add_option("--in", sat.input, "DIMACS CNF file")->required();
  c_sat->add_option("--solver", sat.solver, "counters or rescan")->capture_default_str();

  CompleteArgs complete;
  auto* c_complete = app.add_subcommand("complete-demo", "run the DNF verifier through an fDT oracle");
  c_complete->add_option("--in", complete.input, "DNF file")->required();
  add_stream(c_complete, complete.stream);
  c_complete->add_option("--oracle", complete.oracle, "first-dnf or enumeration")->capture_default_str();

  BenchArgs bench;
  auto* c_bench = app.add_subcommand("bench", "naive vs counter dDNF cost and forest probes");
  c_bench->add_option("--sizes", bench.sizes, "clause counts / forest sizes")->delimiter(',');
  c_bench->add_option("--updates", bench.updates, "updates per size")->capture_default_str();
  c_bench->add_option("--width", bench.width, "clause width")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Report report("none");
    if (*c_eval) report = cmd_eval(eval, opt);
    if (*c_verify) report = cmd_verify(verify, opt);
    if (*c_reduce) report = cmd_reduce(reduce, opt);
    if (*c_sat) report = cmd_sat(sat, opt);
    if (*c_complete) report = cmd_complete(complete, opt);
    if (*c_bench) report = cmd_bench(bench, opt);
    report.print(std::cout, opt);
    return report.ok() ? 0 : 1;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const dyncx::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
