#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gkz {

enum class ErrorKind {
  InvalidInput,
  NotFullRank,
  LatticeIndex,     // columns do not generate Z^d
  NotPointed,
  NotNormal,
  NotHomogeneous,
  NotInCoset,
  NotUpwardClosed,
  EmptyFace,
  LambdaInfeasible, // no lambda satisfies the requested sign conditions
  ScaleLimit,
  Internal,         // a postcondition check failed
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. The kind decides the CLI exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace gkz
