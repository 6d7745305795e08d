#include <gtest/gtest.h>

#include <sstream>

#include "dyncx/connectivity/forest.hpp"
#include "dyncx/connectivity/graph.hpp"
#include "dyncx/connectivity/kconn.hpp"
#include "dyncx/connectivity/oracle.hpp"
#include "dyncx/connectivity/spanning.hpp"
#include "dyncx/connectivity/verifier.hpp"
#include "dyncx/framework/errors.hpp"
#include "dyncx/framework/protocol.hpp"
#include "gen.hpp"

using namespace dyncx;
using namespace dyncx::conn;

namespace {

using LinkResult = DynamicForest::LinkResult;
using CutResult = DynamicForest::CutResult;

DynamicGraph cycle(std::size_t n) {
  DynamicGraph g(n);
  for (std::size_t i = 0; i < n; ++i) g.insert({i, (i + 1) % n});
  return g;
}

OracleFactory rebuild_factory() {
  return [](DynamicGraph g) { return std::make_unique<RebuildConnectivity>(std::move(g)); };
}

}  // namespace

TEST(DynamicGraph, Rules) {
  DynamicGraph g(3);
  g.insert({2, 0});
  EXPECT_TRUE(g.contains({0, 2}));
  EXPECT_THROW(g.insert({0, 2}), InvalidEdge);
  EXPECT_THROW(g.insert({1, 1}), InvalidEdge);
  EXPECT_THROW(g.insert({1, 3}), IndexOutOfRange);
  EXPECT_THROW(g.erase({0, 1}), UnknownEdge);
  g.apply(EdgeUpdate{false, 0, 2});
  EXPECT_EQ(g.edge_count(), 0u);
  EXPECT_THROW(g.apply(VarSet{0, true}), UndecodableUpdate);
}

TEST(DynamicGraph, FileRoundTrip) {
  GraphFile f = parse_graph("p graph 4\nk 2\ne 0 1\n2 3\n");
  EXPECT_EQ(f.graph.num_nodes(), 4u);
  EXPECT_EQ(f.k, 2u);
  EXPECT_EQ(f.graph.edge_count(), 2u);
  std::ostringstream out;
  write_graph(out, f.graph, f.k);
  GraphFile g = parse_graph(out.str());
  EXPECT_EQ(g.graph.edges(), f.graph.edges());
  EXPECT_THROW(parse_graph("p graph 2\ne 0 5\n"), ParseError);
  EXPECT_THROW(parse_graph("p graph 2\ne 0 1\ne 1 0\n"), ParseError);
}

TEST(DynamicForest, LinkCutBasics) {
  DynamicForest f(4);
  EXPECT_EQ(f.link(0, 1), LinkResult::kOk);
  EXPECT_EQ(f.link(1, 2), LinkResult::kOk);
  EXPECT_TRUE(f.connected(0, 2));
  EXPECT_EQ(f.link(2, 0), LinkResult::kWouldCycle);
  EXPECT_EQ(f.edge_count(), 2u);
  EXPECT_EQ(f.component_size(0), 3u);
  EXPECT_EQ(f.component_min(2), 0u);
  EXPECT_EQ(f.component_count(), 2u);
  EXPECT_EQ(f.cut(0, 2), CutResult::kNotTreeEdge);
  EXPECT_EQ(f.cut(1, 0), CutResult::kOk);
  EXPECT_FALSE(f.connected(0, 2));
  EXPECT_EQ(f.component_min(2), 1u);
  EXPECT_EQ(f.component_nodes(2), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(f.edges(), (std::vector<Edge>{{1, 2}}));
  EXPECT_THROW(f.link(0, 9), IndexOutOfRange);
}

TEST(DynamicForest, RandomAgainstUnionFind) {
  gen::Rng rng(99);
  const std::size_t n = 40;
  DynamicForest f(n, 7);
  std::set<std::pair<std::size_t, std::size_t>> tree;
  for (int i = 0; i < 5000; ++i) {
    std::size_t a = gen::uniform(rng, 0, n - 1), b = gen::uniform(rng, 0, n - 1);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    oracle::EdgeList es(tree.begin(), tree.end());
    auto lab = oracle::min_labels(n, es);
    if (tree.count({a, b})) {
      ASSERT_EQ(f.cut(a, b), CutResult::kOk);
      tree.erase({a, b});
    } else if (gen::coin(rng, 0.6)) {
      const bool cyc = lab[a] == lab[b];
      ASSERT_EQ(f.link(a, b), cyc ? LinkResult::kWouldCycle : LinkResult::kOk);
      if (!cyc) tree.insert({a, b});
    } else {
      ASSERT_EQ(f.connected(a, b), lab[a] == lab[b]);
      ASSERT_EQ(f.component_min(a), lab[a]);
      ASSERT_EQ(f.component_size(a), static_cast<std::size_t>(std::count(lab.begin(), lab.end(), lab[a])));
    }
    ASSERT_LE(f.last_op_probes(), f.probe_budget());
  }
  EXPECT_EQ(f.component_count(), oracle::components(n, oracle::EdgeList(tree.begin(), tree.end())));
}

TEST(DynamicForest, CopiesAreIndependent) {
  DynamicForest f(3);
  f.link(0, 1);
  DynamicForest g = f;
  g.cut(0, 1);
  EXPECT_TRUE(f.connected(0, 1));
  EXPECT_FALSE(g.connected(0, 1));
}

TEST(ConnVerifier, PathDeleteNoProof) {
  DynamicGraph g(3);
  g.insert({0, 1});
  g.insert({1, 2});
  ConnVerifier v(g);
  EXPECT_EQ(v.step(std::nullopt, Proof::none()), (VerifierOutput{true, 0}));
  EXPECT_EQ(v.step(Update{EdgeUpdate{false, 1, 2}}, Proof::none()), (VerifierOutput{false, 0}));
}

TEST(ConnVerifier, CycleReplacement) {
  DynamicGraph g(3);
  g.insert({0, 1});
  g.insert({1, 2});
  ConnVerifier v(g);
  v.step(std::nullopt, Proof::none());
  v.step(Update{EdgeUpdate{true, 0, 2}}, Proof::none());
  ASSERT_TRUE(v.forest().has_edge(0, 1));
  Step del = Update{EdgeUpdate{false, 0, 1}};
  EXPECT_EQ(honest_conn_prover(v, del), Proof::from_edge({0, 2}));
  EXPECT_EQ(v.step(del, Proof::from_edge({0, 2})), (VerifierOutput{true, 1}));
  EXPECT_TRUE(v.forest_inside_graph());
}

TEST(ConnVerifier, BadProofs) {
  DynamicGraph g = cycle(4);
  ConnVerifier v(g);
  v.step(std::nullopt, Proof::none());
  ConnVerifier w = v;
  Step del = Update{EdgeUpdate{false, 0, 1}};
  ASSERT_TRUE(v.deletes_tree_edge(del));
  // (0,2) is not an edge; (1,2) would close a cycle in the forest.
  EXPECT_EQ(v.step(del, Proof::from_edge({0, 2})), (VerifierOutput{false, -1}));
  EXPECT_EQ(w.step(del, Proof::from_edge({1, 2})).y, -1);
  EXPECT_THROW(v.step(Update{EdgeUpdate{false, 0, 1}}, Proof::none()), UnknownEdge);
}

TEST(ConnVerifier, HonestMatchesMaximizer) {
  gen::Rng rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = gen::uniform(rng, 2, 9);
    DynamicGraph g = gen::graph(rng, n, 0.4);
    UpdateStream s = gen::edge_toggles(rng, g, 40);
    ConnVerifier a(g), b(g);
    auto ta = run_protocol(a, honest_conn_prover, s);
    auto tb = run_protocol(b, RewardMaximizingProver<ConnVerifier>{}, s);
    ASSERT_TRUE(ta == tb);
    DynamicGraph replay = g;
    ASSERT_EQ(ta[0].output.x, oracle::connected(n, gen::edge_list(replay)));
    for (std::size_t t = 0; t < s.size(); ++t) {
      replay.apply(s[t]);
      ASSERT_EQ(ta[t + 1].output.x, oracle::connected(n, gen::edge_list(replay)));
    }
  }
}

TEST(VerifierBackedConnectivity, TracksGraph) {
  gen::Rng rng(6);
  DynamicGraph g = gen::graph(rng, 8, 0.3);
  VerifierBackedConnectivity o(g);
  RebuildConnectivity r(g);
  for (const Update& u : gen::edge_toggles(rng, g, 200)) {
    const auto& e = std::get<EdgeUpdate>(u);
    if (e.insert) {
      o.insert({e.u, e.v});
      r.insert({e.u, e.v});
    } else {
      o.erase({e.u, e.v});
      r.erase({e.u, e.v});
    }
    ASSERT_EQ(o.connected(), r.connected());
  }
  EXPECT_EQ(o.calls(), r.calls());
}

TEST(SpanningForest, BridgeAddsRepresentative) {
  DynamicGraph g(4);
  g.insert({0, 1});
  g.insert({1, 2});
  g.insert({2, 3});
  SpanningForestProtocol p(g, rebuild_factory());
  EXPECT_EQ(p.representatives(), (std::set<std::size_t>{0}));
  ForestStep st = p.step(EdgeUpdate{false, 1, 2}, honest_replacement);
  EXPECT_TRUE(st.tree_edge_deleted);
  EXPECT_FALSE(st.oracle_connected);
  EXPECT_EQ(p.representatives(), (std::set<std::size_t>{0, 2}));
  EXPECT_TRUE(is_spanning_forest_of(p.forest(), p.graph()));
}

TEST(SpanningForest, CycleEdgeReplaced) {
  SpanningForestProtocol p(cycle(5), rebuild_factory());
  const Edge tree_edge = p.forest().edges().front();
  ForestStep st = p.step(EdgeUpdate{false, tree_edge.u, tree_edge.v}, honest_replacement);
  EXPECT_TRUE(st.oracle_connected);
  EXPECT_TRUE(st.replacement_valid);
  EXPECT_TRUE(st.vouched);
  EXPECT_EQ(p.representatives().size(), 1u);
  EXPECT_TRUE(is_spanning_forest_of(p.forest(), p.graph()));
}

TEST(SpanningForest, BogusReplacementLosesSync) {
  SpanningForestProtocol p(cycle(5), rebuild_factory());
  const Edge tree_edge = p.forest().edges().front();
  auto bogus = [](const SpanningForestProtocol&, Edge deleted) { return std::optional<Edge>(deleted); };
  ForestStep st = p.step(EdgeUpdate{false, tree_edge.u, tree_edge.v}, bogus);
  EXPECT_FALSE(st.replacement_valid);
  EXPECT_FALSE(st.vouched);
  EXPECT_FALSE(p.in_sync());
  EXPECT_FALSE(p.step(QueryMarker{}, honest_replacement).vouched);
}

TEST(SpanningForest, RandomHonestPlay) {
  gen::Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = gen::uniform(rng, 2, 10);
    DynamicGraph g = gen::graph(rng, n, 0.3);
    SpanningForestProtocol p(g, rebuild_factory());
    for (const Update& u : gen::edge_toggles(rng, g, 50)) {
      ForestStep st = p.step(u, honest_replacement);
      ASSERT_TRUE(st.vouched);
      const auto es = gen::edge_list(p.graph());
      auto want = oracle::min_labels(n, es);
      oracle::EdgeList fe;
      for (const Edge& e : p.forest().edges()) {
        ASSERT_TRUE(p.graph().contains(e));
        fe.push_back({e.u, e.v});
      }
      ASSERT_EQ(fe.size() + oracle::components(n, es), n);
      ASSERT_EQ(oracle::min_labels(n, fe), want);
      std::set<std::size_t> reps(want.begin(), want.end());
      ASSERT_EQ(p.representatives(), reps);
    }
  }
}

TEST(KConn, BridgeAndCycle) {
  DynamicGraph g(4);
  g.insert({0, 1});
  g.insert({1, 2});
  g.insert({2, 0});
  g.insert({2, 3});
  KConnVerifier v(g, 2);
  const Edge bridge[] = {{2, 3}};
  EXPECT_EQ(v.step(std::nullopt, Proof::from_edges(bridge)), (VerifierOutput{true, 1}));
  EXPECT_LE(v.last_check_calls(), 3u);

  KConnVerifier c(cycle(5), 2);
  for (std::size_t i = 0; i < 5; ++i) {
    const Edge one[] = {{i, (i + 1) % 5}};
    KConnVerifier copy = c;
    EXPECT_EQ(copy.step(std::nullopt, Proof::from_edges(one)), (VerifierOutput{false, 0}));
  }
}

TEST(KConn, InvalidProofs) {
  KConnVerifier v(cycle(5), 2);
  const Edge two[] = {{0, 1}, {1, 2}};
  const Edge foreign[] = {{0, 2}};
  const Edge dup[] = {{0, 1}, {1, 0}};
  EXPECT_EQ(KConnVerifier(v).step(std::nullopt, Proof::from_edges(two)), (VerifierOutput{false, -1}));
  EXPECT_EQ(KConnVerifier(v).step(std::nullopt, Proof::from_edges(foreign)), (VerifierOutput{false, -1}));
  KConnVerifier v3(cycle(5), 3);
  EXPECT_EQ(v3.step(std::nullopt, Proof::from_edges(dup)), (VerifierOutput{false, -1}));
  EXPECT_EQ(KConnVerifier(v).step(std::nullopt, Proof(std::vector<std::uint8_t>{1, 2, 3})),
            (VerifierOutput{false, -1}));
}

TEST(KConn, EmptyProofCertifiesDisconnection) {
  DynamicGraph g(3);
  g.insert({0, 1});
  KConnVerifier v(g, 1);
  EXPECT_EQ(v.step(std::nullopt, Proof::none()), (VerifierOutput{true, 1}));
}

TEST(MinCut, Examples) {
  EXPECT_EQ(mincut_bruteforce(cycle(5)).value, 2u);
  DynamicGraph tree(5);
  tree.insert({0, 1});
  tree.insert({0, 2});
  tree.insert({2, 3});
  tree.insert({2, 4});
  MinCut t = mincut_bruteforce(tree);
  EXPECT_EQ(t.value, 1u);
  ASSERT_EQ(t.witness.size(), 1u);
  DynamicGraph cut = tree;
  cut.erase(t.witness[0]);
  EXPECT_FALSE(is_connected(cut));
  EXPECT_EQ(mincut_bruteforce(DynamicGraph(1)).value, std::numeric_limits<std::size_t>::max());
  EXPECT_THROW(mincut_bruteforce(DynamicGraph(10), 5), BudgetExceeded);
}

TEST(MinCut, MatchesBipartitionEnumeration) {
  gen::Rng rng(50);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = gen::uniform(rng, 2, 8);
    DynamicGraph g = gen::graph(rng, n, gen::uniform(rng, 1, 9) / 10.0);
    MinCut c = mincut_bruteforce(g);
    ASSERT_EQ(c.value, oracle::mincut_bipartitions(n, gen::edge_list(g)));
    ASSERT_EQ(c.witness.size(), c.value);
    DynamicGraph h = g;
    for (const Edge& e : c.witness) h.erase(e);
    ASSERT_FALSE(is_connected(h));
  }
}

TEST(KConn, HonestProverMatchesMinCut) {
  gen::Rng rng(51);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = gen::uniform(rng, 2, 8), k = gen::uniform(rng, 1, 4);
    DynamicGraph g = gen::graph(rng, n, 0.5);
    UpdateStream s = gen::edge_toggles(rng, g, 20);
    KConnVerifier v(g, k);
    auto tr = run_protocol(v, honest_kconn_prover, s);
    DynamicGraph replay = g;
    for (std::size_t t = 0; t <= s.size(); ++t) {
      if (t > 0) replay.apply(s[t - 1]);
      ASSERT_EQ(tr[t].output.x, oracle::mincut_bipartitions(n, gen::edge_list(replay)) < k);
    }
  }
}

TEST(KConn, MaximizerAgreesOnSmallGraphs) {
  gen::Rng rng(52);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = gen::uniform(rng, 2, 5), k = gen::uniform(rng, 1, 3);
    DynamicGraph g = gen::graph(rng, n, 0.6);
    UpdateStream s = gen::edge_toggles(rng, g, 8);
    KConnVerifier a(g, k), b(g, k);
    auto ta = run_protocol(a, honest_kconn_prover, s).answers();
    auto tb = run_protocol(b, RewardMaximizingProver<KConnVerifier>{}, s).answers();
    ASSERT_EQ(ta, tb);
  }
}
