#pragma once

#include <stdexcept>
#include <string>

namespace ringdef {

enum class ErrorCode {
  EncodingMismatch,
  UnsupportedQuotient,
  UnsupportedStrategy,
  NotAField,
  NotPrime,
  NotASimpleRoot,
  NotFinite,
  NotPositiveExistential,
  BudgetExhausted,
  InfeasibleScan,
  ParseError,
  BadArgument,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string msg)
      : std::runtime_error(std::move(msg)), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace ringdef
