#pragma once

#include <stdexcept>
#include <string>

namespace gcodim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or mathematically invalid input. The CLI maps these to exit code 1.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class SchemaError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class GroupError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class AssociativityError : public ValidationError {
 public:
  AssociativityError(const std::string& what, std::size_t i, std::size_t j, std::size_t l)
      : ValidationError(what), triple_{i, j, l} {}
  struct Triple {
    std::size_t i, j, l;
  };
  const Triple& witness() const noexcept { return triple_; }

 private:
  Triple triple_;
};

class GradingError : public ValidationError {
 public:
  GradingError(const std::string& what, std::size_t i, std::size_t j, std::size_t coordinate)
      : ValidationError(what), i_(i), j_(j), coordinate_(coordinate) {}
  std::size_t left() const noexcept { return i_; }
  std::size_t right() const noexcept { return j_; }
  std::size_t coordinate() const noexcept { return coordinate_; }

 private:
  std::size_t i_, j_, coordinate_;
};

class UnitError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DimensionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class UnknownGroupElement : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A computation refused to run because it would exceed a configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NotUnital : public Error {
 public:
  using Error::Error;
};

class InsufficientTruncation : public Error {
 public:
  using Error::Error;
};

class WindowTooShort : public Error {
 public:
  using Error::Error;
};

class DegenerateWindow : public Error {
 public:
  using Error::Error;
};

// Results that contradict a mathematical invariant: always an implementation
// bug or a mislabelled input. The CLI maps these to exit code 3.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class NegativeMultiplicity : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

class NegativeDelta : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

class RankMismatch : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

}  // namespace gcodim
