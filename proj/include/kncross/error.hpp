#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kncross {

enum class ErrorCode {
  validation,
  parse,
  precondition,
  malformed_tableau,
  range_guard,
  inexact_division,
  seed_mismatch,
};

std::string_view error_code_name(ErrorCode code);

/// Base error for every contract violation raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kncross
