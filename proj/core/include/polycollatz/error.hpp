#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polycollatz {

enum class ErrorCode {
  ZeroInput,
  OddInput,
  EvenInput,
  SyntaxError,
  DuplicateTerm,
  InsufficientTerms,
  BudgetExhausted,
  DomainTooSmall,
  CapExceeded,
  InvalidArgument,
  InternalMismatch,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
/// Parse failures also carry the byte offset at which they were detected.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  Error(ErrorCode code, const std::string& message, std::size_t offset)
      : std::runtime_error(message), code_(code), offset_(offset) {}

  ErrorCode code() const noexcept { return code_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  ErrorCode code_;
  std::size_t offset_ = 0;
};

}  // namespace polycollatz
