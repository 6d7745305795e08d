#pragma once

#include <iosfwd>
#include <string_view>

#include "dyncx/equiv/problems.hpp"

namespace dyncx::equiv {

// All indices are 0-based, matching the update stream tokens.
//
//   p aw <|L|> <|R|>        e <l> <r>        c <l> <W|B>   (uncolored nodes are white)
//   p ov <n> <m>            v <rows...>      u <bits>      (a bare line of rows is a column too)
//   p hg <n> <m>            e <nodes...>     s <bits>      (a bare line of nodes is an edge too)
//
// Comment lines start with '#', or with 'c' in the ov and hg formats.
AllWhiteInstance parse_aw(std::istream& in);
AllWhiteInstance parse_aw(std::string_view text);
SparseOvInstance parse_ov(std::istream& in);
SparseOvInstance parse_ov(std::string_view text);
// Empty hyperedges are rejected.
HypergraphInstance parse_hg(std::istream& in);
HypergraphInstance parse_hg(std::string_view text);

void write_aw(std::ostream& out, const AllWhiteInstance& aw);
void write_ov(std::ostream& out, const SparseOvInstance& ov);
void write_hg(std::ostream& out, const HypergraphInstance& h);

}  // namespace dyncx::equiv
