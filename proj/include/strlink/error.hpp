#pragma once

#include <stdexcept>
#include <string>

namespace strlink {

enum class ErrorCode {
  MalformedWord,
  NotAStringLink,
  ArityMismatch,
  EmptySelection,
  BadCrossingId,
  SyntaxError,
  SemanticError,
  NotClosed,
  SingularInput,
  RecursionBudgetExceeded,
  MultiComponent,
  UnknownName,
  Inconsistent,
  Underdetermined,
  UnvalidatedWeight,
  NotOrderTwo,
  BadColor,
  NotInSL2,
};

const char* to_string(ErrorCode code);

/// Every failure in the library surfaces as an Error carrying a code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace strlink
