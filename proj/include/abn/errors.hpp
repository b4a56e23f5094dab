#pragma once

#include <stdexcept>
#include <string>

namespace abn {

enum class ErrorKind {
  NegativeArgument,
  NonNegativeChi,
  ChiZero,
  ZeroCharge,
  Proportional,
  NegativeSquare,
  Empty,
  InvalidRange,
  InvalidSurface,
};

const char* to_string(ErrorKind kind);

// Domain error raised for inputs outside an operation's contract.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised when an arithmetic identity the algorithms rely on fails.
// Reaching one of these is a bug, never a user error.
class IntegralityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace abn
