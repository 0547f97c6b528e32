#include "krein/error.hpp"

namespace krein {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::SingularGram: return "SingularGram";
    case ErrorCode::InvalidSignature: return "InvalidSignature";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NoFactorization: return "NoFactorization";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NotComplementary: return "NotComplementary";
    case ErrorCode::NotSelfadjoint: return "NotSelfadjoint";
    case ErrorCode::BadProjection: return "BadProjection";
    case ErrorCode::InfeasibleInstance: return "InfeasibleInstance";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownCommand: return "UnknownCommand";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace krein
