#include "lieindex/error.hpp"

namespace lieindex {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::NotASubalgebra: return "NotASubalgebra";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::CompletionFailed: return "CompletionFailed";
    case ErrorKind::InvalidCartanMatrix: return "InvalidCartanMatrix";
    case ErrorKind::InadmissiblePartition: return "InadmissiblePartition";
    case ErrorKind::RankOutOfBounds: return "RankOutOfBounds";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::NotIntegerDiagonalizable: return "NotIntegerDiagonalizable";
    case ErrorKind::CrossCheckFailed: return "CrossCheckFailed";
    case ErrorKind::RegularElementNotFound: return "RegularElementNotFound";
    case ErrorKind::SolveFailed: return "SolveFailed";
    case ErrorKind::CertifyBudgetExceeded: return "CertifyBudgetExceeded";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace lieindex
