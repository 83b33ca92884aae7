#pragma once

#include <stdexcept>
#include <string>

namespace octf4 {

enum class ErrorCode {
  invalid_argument,
  parse_error,
  not_on_variety,
  residual_failure,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace octf4
