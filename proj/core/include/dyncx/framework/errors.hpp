#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dyncx {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UndecodableUpdate : public Error {
 public:
  using Error::Error;
};

class ProofOutOfSpace : public Error {
 public:
  using Error::Error;
};

class EmptyProofSpace : public Error {
 public:
  using Error::Error;
};

class VarOutOfRange : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class MalformedClause : public Error {
 public:
  using Error::Error;
};

class InvalidInstance : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class UnknownEdge : public Error {
 public:
  using Error::Error;
};

class InvalidEdge : public Error {
 public:
  using Error::Error;
};

class NotNormalized : public Error {
 public:
  using Error::Error;
};

class EmptyCollection : public Error {
 public:
  using Error::Error;
};

class OracleDesync : public Error {
 public:
  using Error::Error;
};

// Raised by every text-format reader. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace dyncx
