#include "dunion/error.hpp"

namespace dunion {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::MatchingFailed: return "MatchingFailed";
    case ErrorKind::InvalidFactorization: return "InvalidFactorization";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::NonPermutationSummand: return "NonPermutationSummand";
    case ErrorKind::CouplingNotUnitary: return "CouplingNotUnitary";
    case ErrorKind::DenseSupportViolated: return "DenseSupportViolated";
    case ErrorKind::Budget: return "Budget";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace dunion
