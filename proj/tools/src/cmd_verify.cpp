#include <functional>
#include <random>

#include "commands.hpp"
#include "dyncx/connectivity/kconn.hpp"
#include "dyncx/connectivity/spanning.hpp"
#include "dyncx/connectivity/verifier.hpp"
#include "dyncx/dnf/io.hpp"
#include "dyncx/dnf/verifier.hpp"
#include "dyncx/framework/protocol.hpp"

namespace dyncx::cli {
namespace {

enum class ProverKind { kHonest, kMaximizing, kRandom, kAdversarial };

struct ProverChoice {
  ProverKind kind = ProverKind::kHonest;
  std::string adversary;
};

ProverChoice parse_prover(const std::string& s) {
  if (s == "honest") return {ProverKind::kHonest, {}};
  if (s == "maximizing") return {ProverKind::kMaximizing, {}};
  if (s == "random") return {ProverKind::kRandom, {}};
  if (s.rfind("adversarial:", 0) == 0) return {ProverKind::kAdversarial, s.substr(12)};
  throw InputError("--prover must be honest, maximizing, random or adversarial:<name>");
}

[[noreturn]] void unknown_adversary(const std::string& name, const char* known) {
  throw InputError("unknown adversary '" + name + "' (known: " + known + ")");
}

template <class V>
void protocol_report(Report& report, V verifier, const Prover<V>& prover, const UpdateStream& stream,
                     const std::vector<bool>& truth, bool expect_complete) {
  ProofTranscript transcript = run_protocol(verifier, prover, stream);
  Json steps = Json::array();
  bool sound = true, complete = true;
  for (const ProofRecord& r : transcript) {
    Json row;
    row["step"] = r.step;
    row["update"] = r.update ? Json(format_update(*r.update)) : Json(nullptr);
    row["proof"] = r.proof.describe();
    row["proof_hex"] = r.proof.hex();
    row["x"] = r.output.x ? 1 : 0;
    row["y"] = r.output.y;
    row["truth"] = truth[r.step] ? 1 : 0;
    steps.push_back(row);
    sound = sound && (!r.output.x || truth[r.step]);
    complete = complete && r.output.x == truth[r.step];
  }
  report.body()["steps"] = steps;
  report.flag("soundness", sound);
  if (expect_complete) report.flag("completeness", complete);
}

void verify_dnf(Report& report, const VerifyArgs& args, const ProverChoice& choice, std::mt19937_64& rng) {
  dnf::DnfFile file = parse_file(args.input, [](std::string_view t) { return dnf::parse_dnf(t); });
  const dnf::DnfInstance inst = file.instance;
  UpdateStream stream = args.stream.random ? random_flips(inst.num_vars, args.stream.random, rng) : load_stream(args.stream);

  std::vector<bool> truth;
  dnf::DnfInstance replay = inst;
  truth.push_back(dnf::eval_bruteforce(replay));
  for (const Update& u : stream) {
    dnf::apply_update(replay, u);
    truth.push_back(dnf::eval_bruteforce(replay));
  }

  // post-update assignment as the prover sees it
  auto after = [](const dnf::DnfVerifier& v, const Step& s) {
    std::vector<bool> a = v.assignment();
    if (s) {
      if (const auto* f = std::get_if<VarSet>(&*s)) a.at(f->var) = f->bit;
    }
    return a;
  };
  Prover<dnf::DnfVerifier> prover;
  switch (choice.kind) {
    case ProverKind::kHonest:
      prover = [&](const dnf::DnfVerifier& v, const Step& s) {
        std::vector<bool> a = after(v, s);
        for (std::size_t j = 0; j < inst.clauses.size(); ++j) {
          if (dnf::clause_satisfied(inst.clauses[j], a)) return Proof::from_index(static_cast<std::uint32_t>(j));
        }
        return Proof::none();
      };
      break;
    case ProverKind::kMaximizing: prover = RewardMaximizingProver<dnf::DnfVerifier>(); break;
    case ProverKind::kRandom: prover = RandomProofProver<dnf::DnfVerifier>(rng()); break;
    case ProverKind::kAdversarial:
      if (choice.adversary == "unsat") {
        prover = [&](const dnf::DnfVerifier& v, const Step& s) {
          std::vector<bool> a = after(v, s);
          for (std::size_t j = 0; j < inst.clauses.size(); ++j) {
            if (!dnf::clause_satisfied(inst.clauses[j], a)) return Proof::from_index(static_cast<std::uint32_t>(j));
          }
          return Proof::from_index(static_cast<std::uint32_t>(inst.clauses.size()));
        };
      } else if (choice.adversary == "garbage") {
        prover = [](const dnf::DnfVerifier&, const Step&) { return Proof(std::vector<std::uint8_t>{0xff, 0x01, 0x02}); };
      } else {
        unknown_adversary(choice.adversary, "unsat, garbage");
      }
      break;
  }
  const bool complete = choice.kind == ProverKind::kHonest || choice.kind == ProverKind::kMaximizing;
  protocol_report(report, dnf::DnfVerifier(inst), prover, stream, truth, complete);
}

// A uniformly random pair of distinct nodes.
Edge random_pair(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> node(0, n - 1);
  std::size_t u = node(rng), v = node(rng);
  while (n > 1 && v == u) v = node(rng);
  return Edge{u, v}.normalized();
}

conn::DynamicGraph after_step(conn::DynamicGraph g, const Step& s) {
  if (s) g.apply(*s);
  return g;
}

void verify_conn(Report& report, const VerifyArgs& args, const ProverChoice& choice, std::mt19937_64& rng) {
  conn::GraphFile file = parse_file(args.input, [](std::string_view t) { return conn::parse_graph(t); });
  const std::size_t n = file.graph.num_nodes();
  UpdateStream stream = args.stream.random ? random_edge_toggles(file.graph, args.stream.random, rng) : load_stream(args.stream);
  std::vector<bool> truth;
  conn::DynamicGraph replay = file.graph;
  truth.push_back(conn::is_connected(replay));
  for (const Update& u : stream) {
    replay.apply(u);
    truth.push_back(conn::is_connected(replay));
  }

  Prover<conn::ConnVerifier> prover;
  switch (choice.kind) {
    case ProverKind::kHonest: prover = conn::honest_conn_prover; break;
    case ProverKind::kMaximizing: prover = RewardMaximizingProver<conn::ConnVerifier>(); break;
    case ProverKind::kRandom:
      prover = [&](const conn::ConnVerifier&, const Step&) {
        return n < 2 ? Proof::none() : Proof::from_edge(random_pair(n, rng));
      };
      break;
    case ProverKind::kAdversarial:
      if (choice.adversary == "cycle") {
        // an edge F still connects after the cut: linking it closes a cycle
        prover = [](const conn::ConnVerifier& v, const Step& s) {
          conn::DynamicGraph g = after_step(v.graph(), s);
          conn::DynamicForest f = v.forest();
          if (v.deletes_tree_edge(s)) {
            const auto& e = std::get<EdgeUpdate>(*s);
            f.cut(e.u, e.v);
          }
          for (const Edge& e : g.edges()) {
            if (f.connected(e.u, e.v)) return Proof::from_edge(e);
          }
          return Proof::from_edge({0, 0});
        };
      } else if (choice.adversary == "nonedge") {
        prover = [n](const conn::ConnVerifier& v, const Step& s) {
          conn::DynamicGraph g = after_step(v.graph(), s);
          for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) {
              if (!g.contains({a, b})) return Proof::from_edge({a, b});
            }
          }
          return Proof::from_edge({0, n});
        };
      } else {
        unknown_adversary(choice.adversary, "cycle, nonedge");
      }
      break;
  }
  const bool complete = choice.kind == ProverKind::kHonest || choice.kind == ProverKind::kMaximizing;
  protocol_report(report, conn::ConnVerifier(file.graph), prover, stream, truth, complete);
}

void verify_kconn(Report& report, const VerifyArgs& args, const ProverChoice& choice, std::mt19937_64& rng) {
  conn::GraphFile file = parse_file(args.input, [](std::string_view t) { return conn::parse_graph(t); });
  const std::size_t k = args.k ? args.k : file.k.value_or(0);
  if (k == 0) throw InputError("k-connectivity needs --k or a 'k' line in the graph file");
  report.body()["k"] = k;
  UpdateStream stream = args.stream.random ? random_edge_toggles(file.graph, args.stream.random, rng) : load_stream(args.stream);
  std::vector<bool> truth;
  conn::DynamicGraph replay = file.graph;
  auto less_than_k = [k](const conn::DynamicGraph& g) { return conn::mincut_bruteforce(g).value < k; };
  truth.push_back(less_than_k(replay));
  for (const Update& u : stream) {
    replay.apply(u);
    truth.push_back(less_than_k(replay));
  }

  Prover<conn::KConnVerifier> prover;
  auto random_subset = [&](const conn::KConnVerifier& v, const Step& s) {
    conn::DynamicGraph g = after_step(v.graph(), s);
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    std::shuffle(edges.begin(), edges.end(), rng);
    std::uniform_int_distribution<std::size_t> size(0, std::min(edges.size(), k - 1));
    edges.resize(size(rng));
    return Proof::from_edges(edges);
  };
  switch (choice.kind) {
    case ProverKind::kHonest: prover = conn::honest_kconn_prover; break;
    case ProverKind::kMaximizing: prover = RewardMaximizingProver<conn::KConnVerifier>(); break;
    case ProverKind::kRandom: prover = random_subset; break;
    case ProverKind::kAdversarial:
      if (choice.adversary == "oversized") {
        prover = [k](const conn::KConnVerifier& v, const Step& s) {
          conn::DynamicGraph g = after_step(v.graph(), s);
          std::vector<Edge> edges(g.edges().begin(), g.edges().end());
          edges.resize(std::min(edges.size(), k));
          return Proof::from_edges(edges);
        };
      } else if (choice.adversary == "foreign") {
        prover = [](const conn::KConnVerifier& v, const Step& s) {
          conn::DynamicGraph g = after_step(v.graph(), s);
          const std::size_t n = g.num_nodes();
          for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) {
              if (!g.contains({a, b})) return Proof::from_edge({a, b});
            }
          }
          return Proof::from_edge({0, n});
        };
      } else {
        unknown_adversary(choice.adversary, "oversized, foreign");
      }
      break;
  }
  const bool complete = choice.kind == ProverKind::kHonest || choice.kind == ProverKind::kMaximizing;
  protocol_report(report, conn::KConnVerifier(file.graph, k), prover, stream, truth, complete);
}

void verify_spanning(Report& report, const VerifyArgs& args, const ProverChoice& choice, std::mt19937_64& rng) {
  conn::GraphFile file = parse_file(args.input, [](std::string_view t) { return conn::parse_graph(t); });
  const std::size_t n = file.graph.num_nodes();
  UpdateStream stream = args.stream.random ? random_edge_toggles(file.graph, args.stream.random, rng) : load_stream(args.stream);
  conn::OracleFactory factory;
  if (args.oracle == "rebuild") {
    factory = [](conn::DynamicGraph g) { return std::make_unique<conn::RebuildConnectivity>(std::move(g)); };
  } else if (args.oracle == "verifier") {
    factory = [](conn::DynamicGraph g) { return std::make_unique<conn::VerifierBackedConnectivity>(std::move(g)); };
  } else {
    throw InputError("--oracle must be rebuild or verifier");
  }
  report.body()["oracle"] = args.oracle;

  conn::ReplacementProver prover;
  switch (choice.kind) {
    case ProverKind::kHonest: prover = conn::honest_replacement; break;
    case ProverKind::kMaximizing:
      // first node pair, in order, that passes the protocol's own check
      prover = [n](const conn::SpanningForestProtocol& p, Edge deleted) -> std::optional<Edge> {
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = a + 1; b < n; ++b) {
            if (p.is_replacement({a, b}, deleted)) return Edge{a, b};
          }
        }
        return std::nullopt;
      };
      break;
    case ProverKind::kRandom:
      prover = [&](const conn::SpanningForestProtocol&, Edge) -> std::optional<Edge> {
        if (n < 2) return std::nullopt;
        return random_pair(n, rng);
      };
      break;
    case ProverKind::kAdversarial:
      if (choice.adversary != "bogus") unknown_adversary(choice.adversary, "bogus");
      prover = [](const conn::SpanningForestProtocol& p, Edge deleted) -> std::optional<Edge> {
        for (const Edge& e : p.graph().edges()) {
          if (!p.is_replacement(e, deleted)) return e;
        }
        return deleted;
      };
      break;
  }

  conn::SpanningForestProtocol protocol(file.graph, factory);
  Json steps = Json::array();
  bool sound = true, complete = true;
  auto record = [&](const conn::ForestStep& s) {
    const bool forest_ok = conn::is_spanning_forest_of(protocol.forest(), protocol.graph());
    const bool reps_ok = protocol.representatives().size() == conn::component_count(protocol.graph());
    Json row;
    row["step"] = s.step;
    row["update"] = s.step == 0 ? Json(nullptr) : Json(format_update(*s.update));
    row["tree_edge"] = s.tree_edge_deleted ? 1 : 0;
    row["oracle_connected"] = s.oracle_connected ? 1 : 0;
    row["replacement"] = s.replacement ? Json("(" + std::to_string(s.replacement->u) + "," +
                                             std::to_string(s.replacement->v) + ")")
                                       : Json(nullptr);
    row["valid"] = s.replacement_valid ? 1 : 0;
    row["vouched"] = s.vouched ? 1 : 0;
    row["forest_ok"] = forest_ok ? 1 : 0;
    row["components"] = protocol.forest().component_count();
    steps.push_back(row);
    sound = sound && (!s.vouched || forest_ok);
    complete = complete && s.vouched && forest_ok && reps_ok;
  };
  record(conn::ForestStep{});
  for (const Update& u : stream) record(protocol.step(u, prover));
  report.body()["steps"] = steps;
  report.body()["oracle_calls"] = protocol.oracle().calls();
  report.flag("soundness", sound);
  if (choice.kind == ProverKind::kHonest || choice.kind == ProverKind::kMaximizing) report.flag("completeness", complete);
}

}  // namespace

Report cmd_verify(const VerifyArgs& args, const Options& opt) {
  Stopwatch clock;
  ProverChoice choice = parse_prover(args.prover);
  std::mt19937_64 rng(opt.seed);
  Report report("verify");
  report.body()["problem"] = args.problem;
  report.body()["input"] = args.input;
  report.body()["prover"] = args.prover;
  if (args.problem == "dnf") {
    verify_dnf(report, args, choice, rng);
  } else if (args.problem == "conn") {
    verify_conn(report, args, choice, rng);
  } else if (args.problem == "kconn") {
    verify_kconn(report, args, choice, rng);
  } else if (args.problem == "spanning-forest") {
    verify_spanning(report, args, choice, rng);
  } else {
    throw InputError("--problem must be dnf, conn, kconn or spanning-forest");
  }
  report.set_wall_ms(clock.ms());
  return report;
}

}  // namespace dyncx::cli
