#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace negent {

enum class ErrorKind {
  NotSquare,
  NotHermitian,
  DomainError,
  DimMismatch,
  EmptyKeep,
  NormError,
  IndexError,
  LimitExceeded,
  DuplicateIndex,
  LabelClash,
  UnknownLabel,
  ParseError,
  InvariantError,
  PartitionError,
  PositivityError,
  SupportError,
  ArakiLiebViolation,
  IoError,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Base of every exception thrown by the library. Carries a machine-readable
/// kind so callers (the CLI in particular) can map failures to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// A density-operator (or probability-vector) invariant failed. `measured`
/// is the offending quantity: the trace for "trace", the Frobenius residual
/// for "hermiticity", the smallest eigenvalue for "positivity".
class InvariantError : public Error {
 public:
  InvariantError(std::string invariant, double measured, const std::string& what)
      : Error(ErrorKind::InvariantError, what),
        invariant_(std::move(invariant)),
        measured_(measured) {}

  const std::string& invariant() const noexcept { return invariant_; }
  double measured() const noexcept { return measured_; }

 private:
  std::string invariant_;
  double measured_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string field, const std::string& what)
      : Error(ErrorKind::ParseError, what), line_(line), field_(std::move(field)) {}

  /// 1-based; 0 when the failure is not tied to a text position.
  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

}  // namespace negent
