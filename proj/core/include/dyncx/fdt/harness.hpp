#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "dyncx/dnf/first_dnf.hpp"
#include "dyncx/fdt/fdnf.hpp"
#include "dyncx/fdt/tree.hpp"
#include "dyncx/framework/proof.hpp"
#include "dyncx/framework/update.hpp"

namespace dyncx::fdt {

// Maintains an fDT instance under single-bit memory writes and answers the
// best tree index.
class FdtOracle {
 public:
  virtual ~FdtOracle() = default;
  virtual void set(std::size_t position, bool bit) = 0;
  virtual std::size_t answer() = 0;
  virtual const std::vector<bool>& memory() const = 0;
};

// Runs every tree on each query.
class EnumerationFdtOracle final : public FdtOracle {
 public:
  explicit EnumerationFdtOracle(FdtInstance inst);
  void set(std::size_t position, bool bit) override { fdt_update(inst_, position, bit); }
  std::size_t answer() override { return fdt_answer(inst_); }
  const std::vector<bool>& memory() const override { return inst_.memory; }

 private:
  FdtInstance inst_;
};

// Path clauses in rank order, answered by the First-DNF binary search over
// clause counters.
class FirstDnfFdtOracle final : public FdtOracle {
 public:
  explicit FirstDnfFdtOracle(const FdtInstance& inst);
  void set(std::size_t position, bool bit) override;
  std::size_t answer() override;
  const std::vector<bool>& memory() const override { return memory_; }
  const dnf::FirstDnfEvaluator& evaluator() const { return evaluator_; }

 private:
  FdtAsDnf mapping_;
  dnf::FirstDnfEvaluator evaluator_;
  std::vector<bool> memory_;
};

struct HarnessStep {
  std::size_t step = 0;
  Step update;
  std::size_t tree = 0;
  Proof proof;
  EndNode leaf;
  std::size_t mirrored_bits = 0;
  std::size_t tree_depth = 0;
};

// Runs a verifier given as a tree collection (one tree per proof) without a
// prover: each step writes the update into memory, mirrors changed bits to
// the oracle, takes the oracle's tree as the proof, executes that tree and
// mirrors its writes back. Updates are VarSet writes into memory; q is a
// no-op. After each step the oracle's memory must equal the verifier's,
// else OracleDesync.
class CompletenessHarness {
 public:
  CompletenessHarness(FdtInstance verifier, std::vector<Proof> tree_proofs, std::unique_ptr<FdtOracle> oracle);

  // The preprocessing step (t = 0); run once before step().
  HarnessStep start();
  HarnessStep step(const Update& update);
  std::vector<HarnessStep> run(const UpdateStream& stream);

  const std::vector<bool>& memory() const { return verifier_.memory; }
  const FdtOracle& oracle() const { return *oracle_; }

 private:
  HarnessStep finish(std::size_t t, Step update, std::size_t mirrored);
  std::size_t write(std::size_t position, bool bit);
  void audit(std::size_t t) const;

  FdtInstance verifier_;
  std::vector<Proof> tree_proofs_;
  std::unique_ptr<FdtOracle> oracle_;
  std::size_t steps_ = 0;
};

}  // namespace dyncx::fdt
