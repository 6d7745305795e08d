#include "commands.hpp"
#include "dyncx/reductions/cnf.hpp"
#include "dyncx/reductions/seth.hpp"

namespace dyncx::cli {

Report cmd_sat(const SatArgs& args, const Options&) {
  Stopwatch clock;
  reductions::CnfInstance cnf = parse_file(args.input, [](std::string_view t) { return reductions::parse_cnf(t); });
  reductions::SatResult result;
  if (args.solver == "counters") {
    result = reductions::sat_via_allwhite<reductions::AllWhiteCounters>(cnf);
  } else if (args.solver == "rescan") {
    result = reductions::sat_via_allwhite<reductions::AllWhiteRescan>(cnf);
  } else {
    throw InputError("--solver must be counters or rescan");
  }
  const std::size_t half = (cnf.num_vars + 1) / 2;
  const std::size_t bound = (std::size_t{1} << half) * (cnf.clauses.size() + 1);

  Report report("sat");
  Json& body = report.body();
  body["input"] = args.input;
  body["solver"] = args.solver;
  body["vars"] = cnf.num_vars;
  body["clauses"] = cnf.clauses.size();
  body["result"] = result.satisfiable ? "SAT" : "UNSAT";
  body["phases"] = result.phases;
  body["color_updates"] = result.color_updates;
  body["queries"] = result.queries;
  body["max_phase_updates"] = result.max_phase_updates;
  body["operation_bound"] = bound;
  if (result.witness) {
    std::string w;
    for (bool b : *result.witness) w += b ? '1' : '0';
    body["witness"] = w;
  }
  report.flag("operation_bound", result.color_updates + result.queries <= bound);
  report.flag("per_phase_bound", result.max_phase_updates <= cnf.clauses.size());
  if (result.witness) report.flag("witness_satisfies", reductions::cnf_satisfied(cnf, *result.witness));
  if (cnf.num_vars <= 24) {
    const bool truth = reductions::sat_bruteforce(cnf).has_value();
    body["bruteforce"] = truth ? "SAT" : "UNSAT";
    report.flag("matches_bruteforce", truth == result.satisfiable);
  }
  report.set_wall_ms(clock.ms());
  return report;
}

}  // namespace dyncx::cli
