#include <random>

#include "commands.hpp"
#include "dyncx/dnf/io.hpp"
#include "dyncx/dnf/verifier.hpp"
#include "dyncx/fdt/compile.hpp"
#include "dyncx/fdt/harness.hpp"
#include "dyncx/framework/protocol.hpp"

namespace dyncx::cli {

Report cmd_complete(const CompleteArgs& args, const Options& opt) {
  Stopwatch clock;
  dnf::DnfFile file = parse_file(args.input, [](std::string_view t) { return dnf::parse_dnf(t); });
  std::mt19937_64 rng(opt.seed);
  UpdateStream stream = args.stream.random ? random_flips(file.instance.num_vars, args.stream.random, rng)
                                           : load_stream(args.stream);

  fdt::CompiledVerifier compiled = fdt::compile_dnf_verifier_to_trees(file.instance);
  std::unique_ptr<fdt::FdtOracle> oracle;
  if (args.oracle == "first-dnf") {
    oracle = std::make_unique<fdt::FirstDnfFdtOracle>(compiled.instance);
  } else if (args.oracle == "enumeration") {
    oracle = std::make_unique<fdt::EnumerationFdtOracle>(compiled.instance);
  } else {
    throw InputError("--oracle must be first-dnf or enumeration");
  }
  fdt::CompletenessHarness harness(compiled.instance, compiled.tree_proofs, std::move(oracle));
  std::vector<fdt::HarnessStep> run = harness.run(stream);

  // replay with brute force and the reward maximizer for the flags
  dnf::DnfInstance replay = file.instance;
  dnf::DnfVerifier verifier(file.instance);
  Json steps = Json::array();
  bool matches = true, argmax = true, mirror = true;
  for (const fdt::HarnessStep& s : run) {
    if (s.update) dnf::apply_update(replay, *s.update);
    const bool truth = dnf::eval_bruteforce(replay);
    auto best = maximize_reward(verifier, s.update);
    verifier.step(s.update, best.proof);
    Json row;
    row["step"] = s.step;
    row["update"] = s.update ? Json(format_update(*s.update)) : Json(nullptr);
    row["tree"] = s.tree;
    row["proof"] = s.proof.describe();
    row["x"] = s.leaf.x ? 1 : 0;
    row["y"] = s.leaf.y;
    row["truth"] = truth ? 1 : 0;
    row["argmax_proof"] = best.proof.describe();
    row["mirrored_bits"] = s.mirrored_bits;
    steps.push_back(row);
    matches = matches && s.leaf.x == truth;
    argmax = argmax && s.proof == best.proof;
    mirror = mirror && s.mirrored_bits <= 1 + s.tree_depth;
  }
  Report report("complete-demo");
  report.body()["input"] = args.input;
  report.body()["oracle"] = args.oracle;
  report.body()["trees"] = compiled.instance.trees.size();
  report.body()["steps"] = steps;
  report.flag("matches_bruteforce", matches);
  report.flag("proofs_are_argmax", argmax);
  report.flag("mirror_bound", mirror);
  report.set_wall_ms(clock.ms());
  return report;
}

}  // namespace dyncx::cli
