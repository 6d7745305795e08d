#include <random>

#include "commands.hpp"
#include "dyncx/dnf/counters.hpp"
#include "dyncx/dnf/io.hpp"

namespace dyncx::cli {

Report cmd_eval(const EvalArgs& args, const Options& opt) {
  if (args.algo != "naive" && args.algo != "counters") throw InputError("--algo must be naive or counters");
  Stopwatch clock;
  dnf::DnfFile file = parse_file(args.input, [](std::string_view t) { return dnf::parse_dnf(t); });
  std::mt19937_64 rng(opt.seed);
  UpdateStream stream = args.stream.random ? random_flips(file.instance.num_vars, args.stream.random, rng)
                                           : load_stream(args.stream);

  Report report("eval");
  Json& body = report.body();
  body["input"] = args.input;
  body["algo"] = args.algo;
  body["vars"] = file.instance.num_vars;
  body["clauses"] = file.instance.num_clauses();
  body["width"] = file.instance.width();

  std::vector<bool> answers;
  std::vector<std::uint64_t> probes;
  if (args.algo == "counters") {
    dnf::ClauseCounters algo(file.instance);
    answers.push_back(algo.answer());
    probes.push_back(0);
    for (const Update& u : stream) {
      std::uint64_t before = algo.probes();
      answers.push_back(algo.apply(u));
      probes.push_back(algo.probes() - before);
    }
  } else {
    dnf::NaiveDnfEvaluator algo(file.instance);
    answers.push_back(algo.answer());
    probes.push_back(algo.probes());
    for (const Update& u : stream) {
      std::uint64_t before = algo.probes();
      answers.push_back(algo.apply(u));
      probes.push_back(algo.probes() - before);
    }
  }

  std::vector<bool> truth;
  if (args.check) {
    dnf::DnfInstance replay = file.instance;
    truth.push_back(dnf::eval_bruteforce(replay));
    for (const Update& u : stream) {
      dnf::apply_update(replay, u);
      truth.push_back(dnf::eval_bruteforce(replay));
    }
  }

  Json steps = Json::array();
  std::uint64_t total = 0, worst = 0;
  bool agree = true;
  for (std::size_t t = 0; t < answers.size(); ++t) {
    Json row;
    row["step"] = t;
    row["update"] = t == 0 ? Json(nullptr) : Json(format_update(stream[t - 1]));
    row["answer"] = answers[t] ? 1 : 0;
    row["probes"] = probes[t];
    if (args.check) {
      row["truth"] = truth[t] ? 1 : 0;
      agree = agree && truth[t] == answers[t];
    }
    if (t > 0) {
      total += probes[t];
      worst = std::max(worst, probes[t]);
    }
    steps.push_back(row);
  }
  body["steps"] = steps;
  body["total_update_probes"] = total;
  body["max_update_probes"] = worst;
  if (args.check) report.flag("matches_bruteforce", agree);
  report.set_wall_ms(clock.ms());
  return report;
}

}  // namespace dyncx::cli
