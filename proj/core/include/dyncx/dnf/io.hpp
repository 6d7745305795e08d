#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "dyncx/dnf/formula.hpp"

namespace dyncx::dnf {

// DIMACS-flavored DNF file:
//
//   c optional comment
//   p dnf <n> <m> <w>
//   1 -2 0            one clause per line, signed 1-based variables, 0-terminated
//   a 1 0 1           assignment (optional; defaults to all zeros)
//   o 2 1             clause order, 1-based clause numbers, first clause first
//                     (optional; makes the file a First-DNF instance)
//
// Clauses wider than the declared w are rejected.
struct DnfFile {
  DnfInstance instance;
  std::size_t declared_width = 0;
  std::optional<std::vector<std::size_t>> order;  // 0-based clause indices

  // The order line if present, else the identity order.
  FirstDnfInstance first_instance() const;
};

DnfFile parse_dnf(std::istream& in);
DnfFile parse_dnf(std::string_view text);

void write_dnf(std::ostream& out, const DnfInstance& inst, std::size_t declared_width,
               const std::vector<std::size_t>* order = nullptr);

}  // namespace dyncx::dnf
