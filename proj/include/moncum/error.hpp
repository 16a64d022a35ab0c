#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace moncum {

enum class ErrorCode {
  MalformedInput,  // unparsable or structurally invalid input
  Truncation,      // a sequence is too short for the requested order
  Size,            // enumeration bound exceeded
  InvalidKind,     // operation not defined for this independence kind
  Precondition,    // mathematical precondition violated
  DivisionByZero,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInput: return "malformed_input";
    case ErrorCode::Truncation: return "truncation";
    case ErrorCode::Size: return "size";
    case ErrorCode::InvalidKind: return "invalid_kind";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::DivisionByZero: return "division_by_zero";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace moncum
