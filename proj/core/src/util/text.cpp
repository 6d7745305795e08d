#include "dyncx/util/text.hpp"

#include <cctype>

namespace dyncx::text {

LineTokens::LineTokens(std::string line, std::size_t line_no)
    : line_(std::move(line)), line_no_(line_no) {
  std::size_t i = 0;
  while (i < line_.size()) {
    while (i < line_.size() && std::isspace(static_cast<unsigned char>(line_[i]))) ++i;
    if (i >= line_.size()) break;
    std::size_t begin = i;
    while (i < line_.size() && !std::isspace(static_cast<unsigned char>(line_[i]))) ++i;
    spans_.push_back({begin, i - begin});
  }
}

std::string_view LineTokens::token(std::size_t i) const {
  if (i >= spans_.size()) fail_line("missing token " + std::to_string(i + 1));
  return std::string_view(line_).substr(spans_[i].begin, spans_[i].length);
}

std::size_t LineTokens::column(std::size_t i) const {
  if (i >= spans_.size()) return line_.size() + 1;
  return spans_[i].begin + 1;
}

void LineTokens::fail(std::size_t i, const std::string& message) const {
  throw ParseError(line_no_, column(i), message);
}

void LineTokens::fail_line(const std::string& message) const {
  throw ParseError(line_no_, spans_.empty() ? 1 : spans_[0].begin + 1, message);
}

void LineTokens::expect_size(std::size_t n) const {
  if (spans_.size() < n) fail(spans_.size(), "expected " + std::to_string(n) + " tokens");
  if (spans_.size() > n) fail(n, "unexpected trailing token");
}

void LineTokens::expect_at_least(std::size_t n) const {
  if (spans_.size() < n) fail(spans_.size(), "expected at least " + std::to_string(n) + " tokens");
}

std::int64_t LineTokens::integer(std::size_t i) const {
  std::string_view t = token(i);
  std::int64_t value = 0;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  if (!t.empty() && t.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) fail(i, "expected an integer, got '" + std::string(t) + "'");
  return value;
}

std::size_t LineTokens::index(std::size_t i) const {
  std::int64_t v = integer(i);
  if (v < 0) fail(i, "expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

bool LineTokens::bit(std::size_t i) const {
  std::string_view t = token(i);
  if (t == "0") return false;
  if (t == "1") return true;
  fail(i, "expected a bit (0 or 1)");
}

std::vector<bool> LineTokens::bits_from(std::size_t first) const {
  std::vector<bool> bits;
  if (first + 1 == size() && token(first).size() > 1) {
    std::string_view packed = token(first);
    for (std::size_t k = 0; k < packed.size(); ++k) {
      if (packed[k] != '0' && packed[k] != '1') {
        throw ParseError(line_no_, column(first) + k, "expected a bit (0 or 1)");
      }
      bits.push_back(packed[k] == '1');
    }
    return bits;
  }
  for (std::size_t i = first; i < size(); ++i) bits.push_back(bit(i));
  return bits;
}

bool LineReader::next(LineTokens& out) {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_no_;
    LineTokens tokens(line, line_no_);
    if (tokens.empty()) continue;
    std::string_view head = tokens.token(0);
    if (head.front() == '#') continue;
    if (!comment_.empty() && head == comment_) continue;
    out = std::move(tokens);
    return true;
  }
  return false;
}

std::string bits_to_string(const std::vector<bool>& bits) {
  std::string s;
  s.reserve(bits.size());
  for (bool b : bits) s.push_back(b ? '1' : '0');
  return s;
}

}  // namespace dyncx::text
