#include "dyncx/dnf/verifier.hpp"

#include <variant>

#include "dyncx/framework/errors.hpp"

namespace dyncx::dnf {

DnfVerifier::DnfVerifier(const DnfInstance& inst)
    : clauses_(std::make_shared<const std::vector<Clause>>(inst.clauses)), assignment_(inst.assignment) {
  inst.validate();
}

VerifierOutput DnfVerifier::step(const Step& step, const Proof& proof) {
  last_probes_ = 0;
  if (step) {
    if (const auto* set = std::get_if<VarSet>(&*step)) {
      if (set->var >= assignment_.size()) throw VarOutOfRange("variable " + std::to_string(set->var) + " out of range");
      assignment_[set->var] = set->bit;
      ++last_probes_;
    } else if (!std::holds_alternative<QueryMarker>(*step)) {
      throw UndecodableUpdate("dDNF verifier accepts only variable updates, got '" + format_update(*step) + "'");
    }
  }
  if (proof.is_none()) return {false, 0};
  auto index = proof.as_index();
  if (!index || *index >= clauses_->size()) return {false, -1};
  for (const Literal& l : (*clauses_)[*index]) {
    ++last_probes_;
    if (!l.satisfied_by(assignment_[l.var])) return {false, -1};
  }
  return {true, 1};
}

std::vector<Proof> DnfVerifier::proof_space(const Step&) const {
  std::vector<Proof> space;
  space.reserve(clauses_->size() + 1);
  space.push_back(Proof::none());
  for (std::size_t j = 0; j < clauses_->size(); ++j) space.push_back(Proof::from_index(static_cast<std::uint32_t>(j)));
  return space;
}

}  // namespace dyncx::dnf
