#include "dyncx/reductions/seth.hpp"

#include <bit>
#include <string>
#include <variant>

#include "dyncx/framework/errors.hpp"

namespace dyncx::reductions {

AllWhiteCounters::AllWhiteCounters(const equiv::TransposedAllWhite& aw)
    : right_adj_(aw.right), colors_(aw.colors), black_(aw.left, 0) {
  aw.validate();
  for (const auto& [l, r] : aw.edges) right_adj_[r].push_back(l);
  for (std::size_t r = 0; r < aw.right; ++r) {
    if (colors_[r] == Color::kBlack) {
      for (std::size_t l : right_adj_[r]) ++black_[l];
    }
  }
  for (std::size_t l = 0; l < aw.left; ++l) {
    if (black_[l] == 0) zero_.insert(l);
  }
}

bool AllWhiteCounters::apply(const Update& update) {
  if (std::holds_alternative<QueryMarker>(update)) return answer();
  const auto* c = std::get_if<ColorSet>(&update);
  if (c == nullptr) throw UndecodableUpdate("all-white accepts only color updates");
  if (c->node >= colors_.size()) throw IndexOutOfRange("colored node " + std::to_string(c->node) + " out of range");
  ++operations_;
  if (colors_[c->node] == c->color) return answer();
  colors_[c->node] = c->color;
  for (std::size_t l : right_adj_[c->node]) {
    ++operations_;
    if (c->color == Color::kBlack) {
      if (black_[l]++ == 0) zero_.erase(l);
    } else {
      if (--black_[l] == 0) zero_.insert(l);
    }
  }
  return answer();
}

std::optional<std::size_t> AllWhiteCounters::witness() const {
  if (zero_.empty()) return std::nullopt;
  return *zero_.begin();
}

bool AllWhiteRescan::apply(const Update& update) {
  equiv::apply_update(aw_, update);
  return answer();
}

SethDriver::SethDriver(const CnfInstance& cnf, std::size_t budget) : cnf_(cnf) {
  cnf_.validate();
  const std::size_t padded = cnf_.num_vars + (cnf_.num_vars % 2);
  half_ = padded / 2;
  if (half_ >= 63 || (std::uint64_t{1} << half_) > budget) {
    throw BudgetExceeded("2^" + std::to_string(half_) + " partial assignments exceed budget " + std::to_string(budget));
  }
  const std::size_t m = cnf_.clauses.size();
  aw_.left = std::size_t{1} << half_;
  aw_.right = m;
  aw_.colors.assign(m, Color::kBlack);
  satisfied_x2_.assign(m, 0);
  occurrences_.resize(half_);
  for (std::size_t j = 0; j < m; ++j) {
    for (const auto& lit : cnf_.clauses[j]) {
      if (lit.var >= half_) {
        occurrences_[lit.var - half_].emplace_back(j, lit.positive);
        if (!lit.positive) ++satisfied_x2_[j];  // X2 starts all zero
      }
    }
    aw_.colors[j] = satisfied_x2_[j] > 0 ? Color::kWhite : Color::kBlack;
    for (std::size_t u1 = 0; u1 < aw_.left; ++u1) {
      bool sat = false;
      for (const auto& lit : cnf_.clauses[j]) {
        if (lit.var < half_ && lit.satisfied_by((u1 >> lit.var) & 1U)) {
          sat = true;
          break;
        }
      }
      if (!sat) aw_.edges.emplace_back(u1, j);
    }
  }
}

std::vector<Update> SethDriver::advance() {
  if (phase_ + 1 >= phase_count()) throw Error("no phases left");
  ++phase_;
  const std::uint64_t next = phase_ ^ (phase_ >> 1);
  const auto flipped = static_cast<std::size_t>(std::countr_zero(next ^ gray_));
  gray_ = next;
  const bool value = (gray_ >> flipped) & 1U;
  std::vector<Update> out;
  for (const auto& [j, positive] : occurrences_[flipped]) {
    const bool was = satisfied_x2_[j] > 0;
    if (positive == value) {
      ++satisfied_x2_[j];
    } else {
      --satisfied_x2_[j];
    }
    const bool now = satisfied_x2_[j] > 0;
    if (was != now) {
      aw_.colors[j] = color_from_bit(now);
      out.push_back(ColorSet{j, aw_.colors[j]});
    }
  }
  return out;
}

std::optional<std::size_t> SethDriver::witness_node() const {
  std::vector<bool> has_black(aw_.left, false);
  for (const auto& [l, r] : aw_.edges) {
    if (aw_.colors[r] == Color::kBlack) has_black[l] = true;
  }
  for (std::size_t l = 0; l < aw_.left; ++l) {
    if (!has_black[l]) return l;
  }
  return std::nullopt;
}

std::vector<bool> SethDriver::assignment(std::size_t u1) const {
  std::vector<bool> a(cnf_.num_vars, false);
  for (std::size_t i = 0; i < cnf_.num_vars; ++i) {
    a[i] = i < half_ ? ((u1 >> i) & 1U) : ((gray_ >> (i - half_)) & 1U);
  }
  return a;
}

}  // namespace dyncx::reductions
