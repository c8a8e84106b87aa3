#pragma once

#include <stdexcept>
#include <string>

namespace normrig {

enum class ErrorCode {
  InvalidInput,
  DimensionMismatch,
  ZeroVector,
  Singular,
  NotWellPositioned,
  Unsupported,
  SizeCap,
  NotFiniteOrder,
};

const char* to_string(ErrorCode code);

/// Exception type raised by every normrig operation on a precondition or
/// input failure. Outcomes that are part of a result (e.g. a non-smooth
/// direction) are reported through return values instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace normrig
