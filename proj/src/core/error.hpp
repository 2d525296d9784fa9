#pragma once

#include <stdexcept>
#include <string>

namespace otk {

enum class ErrorCode {
  DegenerateTriangle,
  EquilateralDegenerate,
  ForbiddenPosition,
  DegenerateChord,
  InvalidRadius,
  OutsideDisc,
  AtNinePointCenter,
  Midpoint,
  AngleTooLarge,
  InvalidArgument,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::EquilateralDegenerate: return "EquilateralDegenerate";
    case ErrorCode::ForbiddenPosition: return "ForbiddenPosition";
    case ErrorCode::DegenerateChord: return "DegenerateChord";
    case ErrorCode::InvalidRadius: return "InvalidRadius";
    case ErrorCode::OutsideDisc: return "OutsideDisc";
    case ErrorCode::AtNinePointCenter: return "AtNinePointCenter";
    case ErrorCode::Midpoint: return "Midpoint";
    case ErrorCode::AngleTooLarge: return "AngleTooLarge";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace otk
