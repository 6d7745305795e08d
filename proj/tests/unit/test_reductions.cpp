#include <gtest/gtest.h>

#include <sstream>

#include "dyncx/framework/errors.hpp"
#include "dyncx/reductions/cnf.hpp"
#include "dyncx/reductions/seth.hpp"
#include "dyncx/reductions/targets.hpp"
#include "gen.hpp"
#include "reduction_oracle.hpp"

using namespace dyncx;
using namespace dyncx::reductions;
using equiv::TransposedAllWhite;

namespace {

const TargetKind kAll[] = {TargetKind::kMaxFlow,  TargetKind::kSubgraphConnectivity, TargetKind::kDiameter,
                           TargetKind::kStReach,  TargetKind::kCountReach,           TargetKind::kCountScc};

TransposedAllWhite complete_black(std::size_t left, std::size_t right) {
  TransposedAllWhite aw;
  aw.left = left;
  aw.right = right;
  for (std::size_t l = 0; l < left; ++l) {
    for (std::size_t r = 0; r < right; ++r) aw.edges.push_back({l, r});
  }
  aw.colors.assign(right, Color::kBlack);
  return aw;
}

}  // namespace

TEST(Reductions, Names) {
  for (TargetKind k : kAll) EXPECT_EQ(parse_target(target_name(k)), k);
  EXPECT_THROW(parse_target("bogus"), Error);
}

TEST(Reductions, AllBlackCompleteIsNo) {
  for (TargetKind k : kAll) {
    Reduction red(k, complete_black(3, 4));
    EXPECT_FALSE(red.answer()) << target_name(k);
    EXPECT_FALSE(testing_oracle::decoded_answer(red)) << target_name(k);
  }
  EXPECT_EQ(build_maxflow(complete_black(3, 4)).value(), 3);
  EXPECT_EQ(build_diameter(complete_black(3, 4)).value(), 3);
}

TEST(Reductions, IsolatedLeftNodeIsYes) {
  TransposedAllWhite aw = complete_black(3, 2);
  aw.left = 4;
  for (TargetKind k : kAll) {
    Reduction red(k, aw);
    EXPECT_TRUE(red.answer()) << target_name(k);
    EXPECT_TRUE(testing_oracle::decoded_answer(red)) << target_name(k);
  }
  EXPECT_LT(build_maxflow(aw).value(), 4);
}

TEST(Reductions, AllWhiteRightIsYes) {
  TransposedAllWhite aw = complete_black(2, 3);
  aw.colors.assign(3, Color::kWhite);
  for (TargetKind k : kAll) EXPECT_TRUE(Reduction(k, aw).answer()) << target_name(k);
  EXPECT_EQ(build_st_reach(aw).value(), 0);
}

TEST(Reductions, DiameterNeedsLeftNodes) {
  TransposedAllWhite aw;
  aw.right = 2;
  aw.colors.assign(2, Color::kBlack);
  EXPECT_THROW(build_diameter(aw), InvalidInstance);
}

// Without the hub, two white right nodes with disjoint neighborhoods sit at
// distance 4 even when every left node has a black neighbor.
TEST(Reductions, DiameterWithoutHubMisreportsNo) {
  TransposedAllWhite aw;
  aw.left = 2;
  aw.right = 3;
  aw.edges = {{0, 0}, {1, 1}, {0, 2}, {1, 2}};
  aw.colors = {Color::kWhite, Color::kWhite, Color::kBlack};
  ASSERT_FALSE(equiv::all_white_bruteforce(aw));

  // l0 l1 r0 r1 r2 s t
  oracle::Digraph g(7);
  for (auto [l, r] : aw.edges) g.edge(l, 2 + r);
  g.edge(5, 0);
  g.edge(5, 1);
  g.edge(4, 6);
  EXPECT_EQ(oracle::diameter(g), 4u);

  Reduction red = build_diameter(aw);
  EXPECT_EQ(red.value(), 3);
  EXPECT_FALSE(red.answer());
}

TEST(Reductions, OneTargetUpdatePerFlip) {
  gen::Rng rng(3);
  for (TargetKind k : kAll) {
    TransposedAllWhite aw = gen::transposed_aw(rng, 4, 5, 0.4);
    Reduction red(k, aw);
    for (const Update& u : gen::colors(rng, 5, 200)) {
      const auto& c = std::get<ColorSet>(u);
      const bool changes = red.colors()[c.node] != c.color;
      ASSERT_EQ(red.translate(u).size(), changes ? 1u : 0u);
      red.step(u);
    }
  }
}

TEST(Reductions, RandomStreamsAgree) {
  gen::Rng rng(10);
  for (TargetKind k : kAll) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t left = gen::uniform(rng, 1, 8), right = gen::uniform(rng, 1, 8);
      TransposedAllWhite aw = gen::transposed_aw(rng, left, right, 0.35);
      Reduction red(k, aw);
      for (const Update& u : gen::colors(rng, right, 40)) {
        red.step(u);
        equiv::apply_update(aw, u);
        const bool src = testing_oracle::source_answer(aw);
        ASSERT_EQ(testing_oracle::decoded_answer(red), src) << target_name(k);
        ASSERT_EQ(red.answer(), src) << target_name(k);
      }
    }
  }
}

TEST(Reductions, TargetUpdateText) {
  EXPECT_EQ(format_target_update({TargetUpdate::Op::kInsertEdge, 3, 7, 1}), "e + 3 7");
  EXPECT_EQ(format_target_update({TargetUpdate::Op::kDeleteEdge, 3, 7, 4}), "e - 3 7 cap 4");
  EXPECT_EQ(format_target_update({TargetUpdate::Op::kNodeOff, 2, 0, 1}), "n - 2");
}

TEST(Cnf, ParseWrite) {
  CnfInstance f = parse_cnf("c x\np cnf 3 2\n1 -3 0\n2\n3 0\n");
  ASSERT_EQ(f.clauses.size(), 2u);
  EXPECT_EQ(f.clauses[1].size(), 2u);
  std::ostringstream out;
  write_cnf(out, f);
  EXPECT_EQ(parse_cnf(out.str()).clauses, f.clauses);
  EXPECT_THROW(parse_cnf("p cnf 2 1\n0\n"), ParseError);
  EXPECT_THROW(parse_cnf("p cnf 2 1\n3 0\n"), ParseError);
}

TEST(Seth, Trivial) {
  CnfInstance one{1, {{{0, true}}}};
  SatResult r = sat_via_allwhite(one);
  EXPECT_TRUE(r.satisfiable);
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(cnf_satisfied(one, *r.witness));
  CnfInstance contra{1, {{{0, true}}, {{0, false}}}};
  EXPECT_FALSE(sat_via_allwhite(contra).satisfiable);
  EXPECT_FALSE(sat_via_allwhite<AllWhiteRescan>(contra).satisfiable);
}

TEST(Seth, MatchesExhaustiveSat) {
  gen::Rng rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = gen::uniform(rng, 2, 12);
    CnfInstance f = gen::cnf3(rng, n, static_cast<std::size_t>(4.26 * static_cast<double>(n)));
    const bool want = oracle::sat(n, gen::masks(f)).has_value();
    SatResult r = sat_via_allwhite(f);
    ASSERT_EQ(r.satisfiable, want);
    ASSERT_EQ(sat_via_allwhite<AllWhiteRescan>(f).satisfiable, want);
    if (want) {
      ASSERT_TRUE(r.witness);
      EXPECT_TRUE(cnf_satisfied(f, *r.witness));
    }
    EXPECT_LE(r.max_phase_updates, f.clauses.size());
    const std::size_t phases = std::size_t{1} << ((n + 1) / 2);
    EXPECT_LE(r.color_updates + r.queries, phases * (f.clauses.size() + 1));
  }
}

TEST(Seth, DriverShape) {
  gen::Rng rng(5);
  CnfInstance f = gen::cnf3(rng, 7, 20);
  SethDriver d(f);
  EXPECT_EQ(d.half(), 4u);
  EXPECT_EQ(d.phase_count(), 16u);
  EXPECT_EQ(d.instance().right, f.clauses.size());
  // Edge (u1, c) iff u1 satisfies none of c's literals on X1.
  for (auto [u1, c] : d.instance().edges) {
    const std::vector<bool> a = d.assignment(u1);
    for (const auto& l : f.clauses[c]) {
      if (l.var < d.half()) {
        EXPECT_NE(a[l.var], l.positive);
      }
    }
  }
}

TEST(Seth, BudgetExceeded) {
  CnfInstance big{40, {{{0, true}}}};
  EXPECT_THROW(SethDriver(big, 1000), BudgetExceeded);
}

TEST(AllWhiteCounters, AgreesWithRescan) {
  gen::Rng rng(8);
  TransposedAllWhite aw = gen::transposed_aw(rng, 6, 9, 0.3);
  AllWhiteCounters c(aw);
  AllWhiteRescan r(aw);
  for (const Update& u : gen::colors(rng, 9, 500)) {
    equiv::apply_update(aw, u);
    ASSERT_EQ(c.apply(u), r.apply(u));
    if (auto w = c.witness()) {
      for (auto [l, rr] : aw.edges) {
        if (l == *w) {
          ASSERT_TRUE(is_white(aw.colors[rr]));
        }
      }
    }
  }
}
