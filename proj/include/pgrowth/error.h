#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pgrowth {

enum class ErrorKind {
  ParseError,
  UnknownSymbol,
  BadVertex,
  InvalidSpec,
  InvalidArgument,
  StateSpaceBudgetExceeded,
  DepthBudgetExceeded,
  MemoryBudgetExceeded,
  SizeBudgetExceeded,
  NoCoset,
  AmbiguousTransversal,
  BadPrime,
  ZeroVector,
  NonSymmetricRequired,
  ExactDivisionFailure,
  EmptySeries,
  RatioBoundViolated,
  PrecisionInsufficient,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pgrowth
