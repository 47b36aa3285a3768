#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wvp {

enum class ErrorCode {
  SelfIntersection = 10,
  WrongOrientation = 11,
  DegenerateVertex = 12,
  HoleOutsideOuter = 13,
  HolesTouch = 14,
  NotGeneralPosition = 15,
  UnsupportedDegeneracy = 20,
  OnCarrier = 21,
  NoHit = 22,
  InternalInconsistency = 30,
  ParseError = 40,
  GenerationFailure = 41,
  InvalidArgument = 42,
};

std::string_view to_string(ErrorCode code);

// Every failure in the library is reported through this type; the CLI maps
// `code()` to its exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

#define WVP_CHECK(cond, msg)                                                   \
  do {                                                                         \
    if (!(cond))                                                               \
      throw ::wvp::Error(::wvp::ErrorCode::InternalInconsistency, (msg));      \
  } while (0)

}  // namespace wvp
