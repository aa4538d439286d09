#pragma once

#include <stdexcept>
#include <string>

namespace arcmld {

// Machine-parsable error codes surfaced by the CLI (one line per failure,
// exit code 1). Input-layer problems (bad file, bad flag) use ParseError
// and exit code 2.
enum class ErrorCode {
  FractionalExponent,
  PseudoReflection,
  LevelTooSmall,
  NonMonomial,
  NotInMaximalIdeal,
  MinorOrderTooHigh,
  ParseError,
  Internal,
};

const char* error_code_name(ErrorCode code);

class ArcError : public std::runtime_error {
 public:
  ArcError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace arcmld
