#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "dyncx/framework/errors.hpp"

namespace dyncx::text {

// Whitespace-separated tokens of one input line, with 1-based columns kept
// for error reporting.
class LineTokens {
 public:
  LineTokens() = default;
  LineTokens(std::string line, std::size_t line_no);

  std::size_t size() const { return spans_.size(); }
  bool empty() const { return spans_.empty(); }
  std::size_t line_no() const { return line_no_; }
  std::string_view token(std::size_t i) const;
  std::size_t column(std::size_t i) const;

  [[noreturn]] void fail(std::size_t i, const std::string& message) const;
  [[noreturn]] void fail_line(const std::string& message) const;

  void expect_size(std::size_t n) const;
  void expect_at_least(std::size_t n) const;

  std::int64_t integer(std::size_t i) const;
  std::size_t index(std::size_t i) const;  // non-negative integer
  bool bit(std::size_t i) const;           // "0" or "1"

  // Bits given either as one packed token ("0110") or as separate tokens,
  // starting at token `first`.
  std::vector<bool> bits_from(std::size_t first) const;

 private:
  struct Span {
    std::size_t begin;
    std::size_t length;
  };
  std::string line_;
  std::vector<Span> spans_;
  std::size_t line_no_ = 0;
};

// Reads non-blank lines, skipping comment lines. A line is a comment when
// its first token equals `comment` (for DIMACS-style files) or starts with
// '#'.
class LineReader {
 public:
  explicit LineReader(std::istream& in, std::string comment = {})
      : in_(in), comment_(std::move(comment)) {}

  bool next(LineTokens& out);
  std::size_t line_no() const { return line_no_; }

 private:
  std::istream& in_;
  std::string comment_;
  std::size_t line_no_ = 0;
};

std::string bits_to_string(const std::vector<bool>& bits);

}  // namespace dyncx::text
