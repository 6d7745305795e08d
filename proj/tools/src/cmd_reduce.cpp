#include <random>

#include "commands.hpp"
#include "dyncx/equiv/io.hpp"
#include "dyncx/reductions/targets.hpp"

namespace dyncx::cli {

Report cmd_reduce(const ReduceArgs& args, const Options& opt) {
  Stopwatch clock;
  reductions::TargetKind kind;
  try {
    kind = reductions::parse_target(args.target);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
  equiv::AllWhiteInstance aw = parse_file(args.input, [](std::string_view t) { return equiv::parse_aw(t); });
  aw.validate();
  // the file colors L and queries R; the reductions color R and query L
  equiv::TransposedAllWhite source = equiv::transpose(aw);
  std::mt19937_64 rng(opt.seed);
  UpdateStream stream = args.stream.random ? random_colors(source.right, args.stream.random, rng) : load_stream(args.stream);

  reductions::Reduction red(kind, source);
  Report report("reduce");
  Json& body = report.body();
  body["target"] = std::string(reductions::target_name(kind));
  body["input"] = args.input;
  body["target_nodes"] = red.graph().num_nodes;

  Json steps = Json::array();
  bool agree_all = true;
  std::size_t max_fanout = 0;
  auto record = [&](std::size_t t, const Step& update, const std::vector<reductions::TargetUpdate>& ups) {
    const bool truth = equiv::all_white_bruteforce(source);
    const std::int64_t value = red.value();
    const bool decoded = red.decode(value);
    Json row;
    row["step"] = t;
    row["update"] = update ? Json(format_update(*update)) : Json(nullptr);
    Json tu = Json::array();
    for (const auto& u : ups) tu.push_back(reductions::format_target_update(u));
    row["target_updates"] = tu;
    row["source"] = truth ? 1 : 0;
    row["target_value"] = value == reductions::kInfiniteDistance ? Json("inf") : Json(value);
    row["decoded"] = decoded ? 1 : 0;
    row["agree"] = decoded == truth ? 1 : 0;
    steps.push_back(row);
    agree_all = agree_all && decoded == truth;
    max_fanout = std::max(max_fanout, ups.size());
  };
  record(0, std::nullopt, {});
  for (std::size_t t = 0; t < stream.size(); ++t) {
    auto ups = red.step(stream[t]);
    equiv::apply_update(source, stream[t]);
    record(t + 1, stream[t], ups);
  }
  body["steps"] = steps;
  body["max_target_updates_per_step"] = max_fanout;
  report.flag("agreement", agree_all);
  report.flag("one_update_per_flip", max_fanout <= 1);
  report.set_wall_ms(clock.ms());
  return report;
}

}  // namespace dyncx::cli
