#pragma once

#include <cstddef>
#include <cstdint>

namespace dyncx {

// Default cap on brute-force enumeration sizes (proof spaces, subset
// lattices, 2^(n/2) SAT phases). Overridden by the DYNCX_BUDGET environment
// variable.
inline constexpr std::size_t kDefaultEnumerationBudget = std::size_t{1} << 22;

std::size_t enumeration_budget();

// ceil(log2(n)) with ceil_log2(0) == ceil_log2(1) == 0.
std::size_t ceil_log2(std::size_t n);

// coefficient * (ceil_log2(n + 2))^exponent: the per-operation probe budget
// for structures promising polylogarithmic work.
std::uint64_t polylog_budget(std::size_t n, std::uint64_t coefficient, unsigned exponent);

}  // namespace dyncx
