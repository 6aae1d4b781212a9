#pragma once

#include <stdexcept>
#include <string>

namespace trigrove {

enum class ErrorCode {
  InvalidArgument,
  InvalidGrove,
  InvalidAst,
  IllegalSpin,
  NotExact,
  BudgetExceeded,
  Parse,
  Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace trigrove
