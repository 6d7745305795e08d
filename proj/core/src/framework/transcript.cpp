#include <json.hpp>

#include "dyncx/framework/protocol.hpp"

namespace dyncx {

std::vector<bool> ProofTranscript::answers() const {
  std::vector<bool> xs;
  xs.reserve(records_.size());
  for (const ProofRecord& r : records_) xs.push_back(r.output.x);
  return xs;
}

std::string ProofTranscript::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const ProofRecord& r : records_) {
    out.push_back({
        {"step", r.step},
        {"update", r.update ? nlohmann::json(format_update(*r.update)) : nlohmann::json(nullptr)},
        {"proof_hex", r.proof.hex()},
        {"x", r.output.x ? 1 : 0},
        {"y", r.output.y},
    });
  }
  return out.dump();
}

bool operator==(const ProofTranscript& a, const ProofTranscript& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const ProofRecord& l = a[i];
    const ProofRecord& r = b[i];
    if (l.step != r.step || l.update != r.update || l.proof != r.proof || !(l.output == r.output)) return false;
  }
  return true;
}

}  // namespace dyncx
