#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace etalab {

// Error categories. The CLI maps these onto process exit codes.
enum class ErrorKind {
  kDomain,     // argument outside the supported region
  kPole,       // evaluation at a pole of gamma or zeta
  kExcluded,   // excluded point s = 1 + 2 pi i k / ln 2
  kBudget,     // direct summation budget exceeded
  kPrecision,  // working precision cannot absorb the cancellation
  kConfig,     // algorithm configuration cannot reach the target
  kNonFinite,  // an intermediate became NaN or infinite
  kParse,      // malformed user input
  kNoZero,     // zero locator found no zero in the bracket
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::kDomain, what) {}
};

// Carries the offending non-positive integer for gamma poles; zeta's pole at
// s = 1 reports 1.
class PoleError : public Error {
 public:
  PoleError(const std::string& what, std::int64_t at)
      : Error(ErrorKind::kPole, what), at_(at) {}
  std::int64_t at() const noexcept { return at_; }

 private:
  std::int64_t at_;
};

class ExcludedPointError : public Error {
 public:
  explicit ExcludedPointError(const std::string& what)
      : Error(ErrorKind::kExcluded, what) {}
};

class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& what) : Error(ErrorKind::kBudget, what) {}
};

class PrecisionError : public Error {
 public:
  explicit PrecisionError(const std::string& what)
      : Error(ErrorKind::kPrecision, what) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(ErrorKind::kConfig, what) {}
};

class NonFiniteError : public Error {
 public:
  explicit NonFiniteError(const std::string& what)
      : Error(ErrorKind::kNonFinite, what) {}
};

// Column is 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t column)
      : Error(ErrorKind::kParse, what + " (column " + std::to_string(column) + ")"),
        column_(column) {}
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

class NoZeroError : public Error {
 public:
  explicit NoZeroError(const std::string& what) : Error(ErrorKind::kNoZero, what) {}
};

}  // namespace etalab
