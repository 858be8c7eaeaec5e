#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace maxdist {

enum class ErrorCode {
  EmptyInput,
  TooFewPoints,
  NonFiniteInput,
  BadParameter,
  ParseError,
  BadMagic,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Library-wide exception. Every failure reported by maxdist carries one of
/// the codes above so callers (the CLI in particular) can map it to an exit
/// status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace maxdist
