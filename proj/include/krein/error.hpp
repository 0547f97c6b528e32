#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace krein {

enum class ErrorCode {
  NotHermitian,
  SingularGram,
  InvalidSignature,
  SpaceMismatch,
  DimensionMismatch,
  NoFactorization,
  NotRegular,
  NotComplementary,
  NotSelfadjoint,
  BadProjection,
  InfeasibleInstance,
  ParseError,
  UnknownCommand,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace krein
