#pragma once

#include <stdexcept>
#include <string>

namespace tricone {

enum class ErrorKind {
  InvalidInput,
  DimensionMismatch,
  Singular,
  ZeroVector,
  NotApplicable,
  HypothesisFailure,
  Integrity,
  Unsupported,
  Parse,
};

/// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tricone
