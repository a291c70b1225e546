#pragma once

#include <stdexcept>
#include <string>

namespace lieindex {

enum class ErrorKind {
  DimensionMismatch,
  AmbientMismatch,
  NotASubalgebra,
  NotInvariant,
  NotAnIdeal,
  NotNilpotent,
  CompletionFailed,
  InvalidCartanMatrix,
  InadmissiblePartition,
  RankOutOfBounds,
  InvalidSpec,
  NotIntegerDiagonalizable,
  CrossCheckFailed,
  RegularElementNotFound,
  SolveFailed,
  CertifyBudgetExceeded,
  Parse,
  Io,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lieindex
