#include "negent/error.hpp"

namespace negent {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::EmptyKeep: return "EmptyKeep";
    case ErrorKind::NormError: return "NormError";
    case ErrorKind::IndexError: return "IndexError";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::DuplicateIndex: return "DuplicateIndex";
    case ErrorKind::LabelClash: return "LabelClash";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvariantError: return "InvariantError";
    case ErrorKind::PartitionError: return "PartitionError";
    case ErrorKind::PositivityError: return "PositivityError";
    case ErrorKind::SupportError: return "SupportError";
    case ErrorKind::ArakiLiebViolation: return "ArakiLiebViolation";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace negent
