#include "fiberalg/error.hpp"

namespace fiberalg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DegreeZero: return "DegreeZero";
    case ErrorKind::BoundaryRoot: return "BoundaryRoot";
    case ErrorKind::FloatBackend: return "FloatBackend";
    case ErrorKind::OutsideDomain: return "OutsideDomain";
    case ErrorKind::DegenerateLeading: return "DegenerateLeading";
    case ErrorKind::InconsistentFiber: return "InconsistentFiber";
    case ErrorKind::NotRational: return "NotRational";
    case ErrorKind::EvaluationFailure: return "EvaluationFailure";
    case ErrorKind::NotAZero: return "NotAZero";
    case ErrorKind::NoWitness: return "NoWitness";
    case ErrorKind::NearCircleZero: return "NearCircleZero";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ZeroAtOrigin: return "ZeroAtOrigin";
    case ErrorKind::Inconclusive: return "Inconclusive";
    case ErrorKind::BoundaryResolutionExceeded: return "BoundaryResolutionExceeded";
    case ErrorKind::StructureNotFound: return "StructureNotFound";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NearCriticalPoint: return "NearCriticalPoint";
    case ErrorKind::NearDegenerate: return "NearDegenerate";
    case ErrorKind::DegreeNotTwo: return "DegreeNotTwo";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace fiberalg
