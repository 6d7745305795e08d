#include "dyncx/util/budget.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace dyncx {

std::size_t enumeration_budget() {
  const char* env = std::getenv("DYNCX_BUDGET");
  if (env == nullptr) return kDefaultEnumerationBudget;
  std::string_view s(env);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return kDefaultEnumerationBudget;
  return value;
}

std::size_t ceil_log2(std::size_t n) {
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < n) ++bits;
  return bits;
}

std::uint64_t polylog_budget(std::size_t n, std::uint64_t coefficient, unsigned exponent) {
  std::uint64_t base = ceil_log2(n + 2);
  std::uint64_t result = coefficient;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace dyncx
