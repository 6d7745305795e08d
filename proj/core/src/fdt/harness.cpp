#include "dyncx/fdt/harness.hpp"

#include <string>
#include <variant>

#include "dyncx/framework/errors.hpp"

namespace dyncx::fdt {

EnumerationFdtOracle::EnumerationFdtOracle(FdtInstance inst) : inst_(std::move(inst)) { inst_.validate(); }

FirstDnfFdtOracle::FirstDnfFdtOracle(const FdtInstance& inst)
    : mapping_(fdt_to_fdnf(inst)), evaluator_(mapping_.first), memory_(inst.memory) {}

void FirstDnfFdtOracle::set(std::size_t position, bool bit) {
  if (position >= memory_.size()) throw IndexOutOfRange("bit " + std::to_string(position) + " past memory");
  memory_[position] = bit;
  evaluator_.set(position, bit);
}

std::size_t FirstDnfFdtOracle::answer() {
  std::optional<std::size_t> clause = evaluator_.first();
  // every tree has exactly one satisfied path, so some clause always holds
  if (!clause) throw EmptyCollection("fDT instance without trees");
  return mapping_.clause_tree[*clause];
}

CompletenessHarness::CompletenessHarness(FdtInstance verifier, std::vector<Proof> tree_proofs,
                                         std::unique_ptr<FdtOracle> oracle)
    : verifier_(std::move(verifier)), tree_proofs_(std::move(tree_proofs)), oracle_(std::move(oracle)) {
  verifier_.validate();
  if (verifier_.trees.empty()) throw EmptyCollection("verifier without trees");
  if (tree_proofs_.size() != verifier_.trees.size()) throw InvalidInstance("one proof per tree expected");
  audit(0);
}

std::size_t CompletenessHarness::write(std::size_t position, bool bit) {
  if (position >= verifier_.memory.size()) {
    throw IndexOutOfRange("bit " + std::to_string(position) + " past verifier memory");
  }
  if (verifier_.memory[position] == bit) return 0;
  verifier_.memory[position] = bit;
  oracle_->set(position, bit);
  return 1;
}

void CompletenessHarness::audit(std::size_t t) const {
  if (oracle_->memory() != verifier_.memory) {
    throw OracleDesync("oracle memory differs from verifier memory after step " + std::to_string(t));
  }
}

HarnessStep CompletenessHarness::finish(std::size_t t, Step update, std::size_t mirrored) {
  HarnessStep out;
  out.step = t;
  out.update = std::move(update);
  out.tree = oracle_->answer();
  if (out.tree >= verifier_.trees.size()) throw OracleDesync("oracle answered a tree past the collection");
  out.proof = tree_proofs_[out.tree];
  const DecisionTree& tree = verifier_.trees[out.tree];
  out.tree_depth = tree.depth();
  std::vector<bool> scratch = verifier_.memory;
  Execution run = execute_tree(tree, scratch);
  for (const auto& [pos, bit] : run.writes) mirrored += write(pos, bit);
  out.leaf = run.leaf;
  out.mirrored_bits = mirrored;
  audit(t);
  return out;
}

HarnessStep CompletenessHarness::start() {
  if (steps_ != 0) throw Error("harness already started");
  steps_ = 1;
  return finish(0, std::nullopt, 0);
}

HarnessStep CompletenessHarness::step(const Update& update) {
  if (steps_ == 0) throw Error("harness not started");
  std::size_t mirrored = 0;
  if (const auto* v = std::get_if<VarSet>(&update)) {
    mirrored += write(v->var, v->bit);
  } else if (!std::holds_alternative<QueryMarker>(update)) {
    throw UndecodableUpdate("harness accepts only bit updates, got '" + format_update(update) + "'");
  }
  return finish(steps_++, update, mirrored);
}

std::vector<HarnessStep> CompletenessHarness::run(const UpdateStream& stream) {
  std::vector<HarnessStep> out;
  out.push_back(start());
  for (const Update& u : stream) out.push_back(step(u));
  return out;
}

}  // namespace dyncx::fdt
