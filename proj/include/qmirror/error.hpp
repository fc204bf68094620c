#pragma once

#include <stdexcept>
#include <string>

namespace qmirror {

enum class ErrorKind {
  RankDeficient,
  NotTotallyUnimodular,
  NotUnimodular,
  DimensionMismatch,
  OnWall,
  Unsupported,
  NonGeneric,
  DivisionByZero,
  PoleAtTruncation,
  NonPositiveGrading,
  SpecMismatch,
  OutOfTruncationRange,
  NonGenericSpecialization,
  TruncationUnderflow,
  TruncationMismatch,
  HypothesisViolated,
  InvalidArgument,
  Parse,
};

const char* error_kind_name(ErrorKind kind);

/// Every failure in the library is reported as an Error carrying its kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qmirror
