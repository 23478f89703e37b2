#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fiberalg {

enum class ErrorKind {
  InvalidInput,
  ParseError,
  DegreeZero,
  BoundaryRoot,
  FloatBackend,
  OutsideDomain,
  DegenerateLeading,
  InconsistentFiber,
  NotRational,
  EvaluationFailure,
  NotAZero,
  NoWitness,
  NearCircleZero,
  BudgetExceeded,
  ZeroAtOrigin,
  Inconclusive,
  BoundaryResolutionExceeded,
  StructureNotFound,
  NotCoprime,
  NearCriticalPoint,
  NearDegenerate,
  DegreeNotTwo,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace fiberalg
