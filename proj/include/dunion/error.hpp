#pragma once

#include <stdexcept>
#include <string>

namespace dunion {

enum class ErrorKind {
  InvalidArgument,
  SizeLimit,
  NotRegular,
  MatchingFailed,
  InvalidFactorization,
  InvalidPartition,
  NonPermutationSummand,
  CouplingNotUnitary,
  DenseSupportViolated,
  Budget,
  Parse,
  Internal,
};

const char* to_string(ErrorKind kind) noexcept;

// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dunion
