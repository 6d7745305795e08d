#include <gtest/gtest.h>

#include <sstream>

#include "dyncx/dnf/counters.hpp"
#include "dyncx/dnf/first_dnf.hpp"
#include "dyncx/dnf/io.hpp"
#include "dyncx/dnf/verifier.hpp"
#include "dyncx/framework/errors.hpp"
#include "dyncx/framework/protocol.hpp"
#include "gen.hpp"

using namespace dyncx;
using dnf::Clause;
using dnf::DnfInstance;

namespace {

DnfInstance make(std::size_t n, std::vector<Clause> clauses, std::vector<bool> a) {
  DnfInstance f;
  f.num_vars = n;
  f.clauses = std::move(clauses);
  f.assignment = std::move(a);
  return f;
}

}  // namespace

TEST(EvalBruteforce, SmallCases) {
  EXPECT_TRUE(dnf::eval_bruteforce(make(3, {{{0, true}, {1, false}}, {{2, true}}}, {true, false, false})));
  EXPECT_FALSE(dnf::eval_bruteforce(make(3, {}, {true, true, true})));
  EXPECT_FALSE(dnf::eval_bruteforce(make(2, {{{0, true}, {1, true}}}, {true, false})));
  EXPECT_TRUE(dnf::eval_bruteforce(make(1, {{}}, {false})));
}

TEST(ClauseCounters, Build) {
  dnf::ClauseCounters a(make(2, {{{0, true}, {1, false}}}, {true, false}));
  EXPECT_EQ(a.unsatisfied_literals(0), 0u);
  EXPECT_EQ(a.satisfied_count(), 1u);
  dnf::ClauseCounters b(make(2, {{{0, true}, {1, true}}}, {false, false}));
  EXPECT_EQ(b.unsatisfied_literals(0), 2u);
  EXPECT_FALSE(b.answer());
}

TEST(ClauseCounters, DuplicateVariableRejected) {
  EXPECT_THROW(dnf::ClauseCounters(make(2, {{{0, true}, {0, false}}}, {true, false})), MalformedClause);
  EXPECT_THROW(dnf::ClauseCounters(make(2, {{{5, true}}}, {true, false})), VarOutOfRange);
}

TEST(ClauseCounters, FlipAndIdempotence) {
  dnf::ClauseCounters c(make(2, {{{0, true}, {1, false}}}, {true, false}));
  EXPECT_TRUE(c.flip(1, false));
  EXPECT_FALSE(c.flip(1, true));
  const std::uint64_t p = c.probes();
  EXPECT_FALSE(c.flip(1, true));
  EXPECT_EQ(c.probes(), p);
  EXPECT_THROW(c.flip(2, true), VarOutOfRange);
  EXPECT_TRUE(c.toggle(1));
}

TEST(ClauseCounters, RandomAgainstRecount) {
  gen::Rng rng(21);
  DnfInstance f = gen::dnf(rng, 50, 200, 3);
  dnf::ClauseCounters c(f);
  auto conj = gen::conj_of(f);
  std::vector<bool> a = f.assignment;
  for (int i = 0; i < 10000; ++i) {
    std::size_t v = gen::uniform(rng, 0, 49);
    bool bit = gen::coin(rng);
    const std::uint64_t before = c.probes();
    const bool changes = a[v] != bit;
    a[v] = bit;
    ASSERT_EQ(c.flip(v, bit), oracle::dnf_true(conj, a));
    ASSERT_EQ(c.probes() - before, changes ? c.occurrence_count(v) : 0u);
  }
  std::size_t sat = 0;
  for (std::size_t j = 0; j < conj.size(); ++j) {
    std::size_t bad = 0;
    for (auto [v, pos] : conj[j]) bad += a[v] != pos;
    ASSERT_EQ(c.unsatisfied_literals(j), bad);
    sat += bad == 0;
  }
  EXPECT_EQ(c.satisfied_count(), sat);
}

TEST(NaiveEvaluator, AgreesWithCounters) {
  gen::Rng rng(4);
  DnfInstance f = gen::dnf(rng, 12, 30, 3);
  dnf::NaiveDnfEvaluator n(f);
  dnf::ClauseCounters c(f);
  for (const Update& u : gen::flips(rng, 12, 500)) ASSERT_EQ(n.apply(u), c.apply(u));
}

TEST(DnfVerifier, Rewards) {
  DnfInstance f = make(2, {{{0, false}}, {{1, false}}, {{0, true}}, {{0, true}, {1, true}}}, {true, false});
  dnf::DnfVerifier v(f);
  EXPECT_EQ(v.step(std::nullopt, Proof::from_index(2)), (VerifierOutput{true, 1}));
  EXPECT_EQ(v.step(Update{QueryMarker{}}, Proof::from_index(3)), (VerifierOutput{false, -1}));
  EXPECT_EQ(v.step(Update{QueryMarker{}}, Proof::none()), (VerifierOutput{false, 0}));
  EXPECT_EQ(v.step(Update{QueryMarker{}}, Proof::from_index(40)), (VerifierOutput{false, -1}));
  EXPECT_EQ(v.step(Update{QueryMarker{}}, Proof(std::vector<std::uint8_t>{1, 2})), (VerifierOutput{false, -1}));
  // Update first, then the proof.
  EXPECT_EQ(v.step(Update{VarSet{1, true}}, Proof::from_index(3)), (VerifierOutput{true, 1}));
  EXPECT_LE(v.last_step_probes(), 3u);
}

TEST(DnfVerifier, ProofSpaceOrder) {
  dnf::DnfVerifier v(make(1, {{{0, true}}, {{0, false}}}, {false}));
  auto space = v.proof_space(std::nullopt);
  ASSERT_EQ(space.size(), 3u);
  EXPECT_TRUE(space[0].is_none());
  EXPECT_EQ(space[1], Proof::from_index(0));
  EXPECT_EQ(space[2], Proof::from_index(1));
}

TEST(DnfVerifier, MaximizingProverIsComplete) {
  gen::Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    DnfInstance f = gen::dnf(rng, 8, 10, 3);
    UpdateStream s = gen::flips(rng, 8, 50);
    dnf::DnfVerifier v(f);
    auto answers = run_protocol(v, RewardMaximizingProver<dnf::DnfVerifier>{}, s).answers();
    auto conj = gen::conj_of(f);
    std::vector<bool> a = f.assignment;
    ASSERT_EQ(answers[0], oracle::dnf_true(conj, a));
    for (std::size_t t = 0; t < s.size(); ++t) {
      a[std::get<VarSet>(s[t]).var] = std::get<VarSet>(s[t]).bit;
      ASSERT_EQ(answers[t + 1], oracle::dnf_true(conj, a));
    }
  }
}

TEST(FirstSatisfied, Order) {
  dnf::FirstDnfInstance f{make(1, {{{0, true}}, {{0, true}}}, {true}), {1, 0}};
  EXPECT_EQ(dnf::first_satisfied_bruteforce(f), 1u);
  f.base.assignment = {false};
  EXPECT_FALSE(dnf::first_satisfied_bruteforce(f));
  f.order = {0, 0};
  EXPECT_THROW(f.validate(), InvalidInstance);
}

TEST(Augment, FourClausesBinaryExpansion) {
  DnfInstance f = make(1, {{{0, true}}, {{0, true}}, {{0, true}}, {{0, true}}}, {false});
  auto aug = dnf::augment_with_search_vars({f, {0, 1, 2, 3}});
  ASSERT_EQ(aug.levels, 2u);
  EXPECT_EQ(aug.formula.num_vars, 5u);
  const Clause& c2 = aug.formula.clauses[2];
  ASSERT_EQ(c2.size(), 3u);
  // Clause 2 = binary 10: first level bit 1, second level bit 0.
  EXPECT_EQ(c2[1], (dnf::Literal{static_cast<std::uint32_t>(aug.search_var(0, true)), true}));
  EXPECT_EQ(c2[2], (dnf::Literal{static_cast<std::uint32_t>(aug.search_var(1, false)), true}));
  for (std::size_t v = 1; v < 5; ++v) EXPECT_TRUE(aug.formula.assignment[v]);
}

TEST(Augment, SingleClauseAddsNothing) {
  auto aug = dnf::augment_with_search_vars({make(2, {{{0, true}}}, {true, false}), {0}});
  EXPECT_EQ(aug.levels, 0u);
  EXPECT_EQ(aug.formula.num_vars, 2u);
}

TEST(Augment, EmptyFormulaUnchanged) {
  auto aug = dnf::augment_with_search_vars({make(3, {}, {true, false, true}), {}});
  EXPECT_EQ(aug.formula.num_vars, 3u);
  EXPECT_TRUE(aug.formula.clauses.empty());
}

TEST(Augment, AgreesWithBaseWhenSearchVarsAreOne) {
  gen::Rng rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = gen::uniform(rng, 1, 10), m = gen::uniform(rng, 1, 8);
    DnfInstance f = gen::dnf(rng, n, m, 3);
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    auto aug = dnf::augment_with_search_vars({f, order});
    auto base = gen::conj_of(f), big = gen::conj_of(aug.formula);
    std::vector<bool> a(aug.formula.num_vars, true);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      for (std::size_t i = 0; i < n; ++i) a[i] = (mask >> i) & 1;
      std::vector<bool> b(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(n));
      ASSERT_EQ(oracle::dnf_true(big, a), oracle::dnf_true(base, b));
    }
  }
}

TEST(FirstDnfQuery, ClausesOneAndThree) {
  DnfInstance f = make(4, {{{0, true}}, {{1, true}}, {{2, true}}, {{3, true}}}, {false, true, false, true});
  dnf::FirstDnfEvaluator e({f, {0, 1, 2, 3}});
  EXPECT_EQ(e.first(), 1u);
  EXPECT_LE(e.last_query_flips(), 10u);
  EXPECT_TRUE(e.search_vars_restored());
  e.set(1, false);
  e.set(3, false);
  EXPECT_FALSE(e.first());
  EXPECT_EQ(e.last_query_flips(), 0u);
  EXPECT_THROW(e.set(4, true), VarOutOfRange);
}

TEST(FirstDnfQuery, RandomAgainstScan) {
  gen::Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = gen::uniform(rng, 1, 8), m = gen::uniform(rng, 1, 20);
    DnfInstance f = gen::dnf(rng, n, m, 3);
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    dnf::FirstDnfEvaluator e({f, order});
    auto conj = gen::conj_of(f);
    std::vector<bool> a = f.assignment;
    for (int q = 0; q < 10; ++q) {
      std::size_t v = gen::uniform(rng, 0, n - 1);
      a[v] = gen::coin(rng);
      e.set(v, a[v]);
      ASSERT_EQ(e.first(), oracle::first_true(conj, order, a));
      ASSERT_LE(e.last_query_flips(), 5 * oracle::ceil_log2(m));
      ASSERT_TRUE(e.search_vars_restored());
    }
  }
}

TEST(DnfFile, ParseAndWrite) {
  auto file = dnf::parse_dnf("c demo\np dnf 3 2 2\n1 -2 0\n3 0\na 1 0 0\no 2 1\n");
  EXPECT_EQ(file.instance.num_vars, 3u);
  ASSERT_EQ(file.instance.clauses.size(), 2u);
  EXPECT_EQ(file.instance.clauses[0], (Clause{{0, true}, {1, false}}));
  EXPECT_EQ(file.instance.assignment, (std::vector<bool>{true, false, false}));
  EXPECT_EQ(file.order, (std::vector<std::size_t>{1, 0}));
  std::ostringstream out;
  dnf::write_dnf(out, file.instance, file.declared_width, &*file.order);
  auto again = dnf::parse_dnf(out.str());
  EXPECT_EQ(again.instance.clauses, file.instance.clauses);
  EXPECT_EQ(again.instance.assignment, file.instance.assignment);
  EXPECT_EQ(again.order, file.order);
}

TEST(DnfFile, Errors) {
  EXPECT_THROW(dnf::parse_dnf(""), ParseError);
  EXPECT_THROW(dnf::parse_dnf("p dnf 2 1\n1 0\n"), ParseError);
  EXPECT_THROW(dnf::parse_dnf("p dnf 2 1 1\n1 2 0\n"), ParseError);
  EXPECT_THROW(dnf::parse_dnf("p dnf 2 1 2\n1 3 0\n"), ParseError);
  EXPECT_THROW(dnf::parse_dnf("p dnf 2 1 2\n1 x 0\n"), ParseError);
  try {
    dnf::parse_dnf("p dnf 2 1 2\n1 x 0\n");
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
}
