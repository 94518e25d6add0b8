#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dualcurve {

enum class ErrorCode {
  NonFinite,
  ZeroRealPart,
  NonpositiveRealPart,
  BadDomain,
  OutOfDomain,
  StencilClipped,
  BadPanelCount,
  NonfiniteState,
  BracketInvalid,
  DegeneratePoint,
  NotAdmissible,
  NotUnitSpeed,
  BadParams,
  SingularFit,
  NotUnimodular,
  NotIsometry,
  CurvatureUndefined,
  StraightPoint,
  UnknownCheck,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::ZeroRealPart: return "ZeroRealPart";
    case ErrorCode::NonpositiveRealPart: return "NonpositiveRealPart";
    case ErrorCode::BadDomain: return "BadDomain";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::StencilClipped: return "StencilClipped";
    case ErrorCode::BadPanelCount: return "BadPanelCount";
    case ErrorCode::NonfiniteState: return "NonfiniteState";
    case ErrorCode::BracketInvalid: return "BracketInvalid";
    case ErrorCode::DegeneratePoint: return "DegeneratePoint";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::NotUnitSpeed: return "NotUnitSpeed";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::SingularFit: return "SingularFit";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::NotIsometry: return "NotIsometry";
    case ErrorCode::CurvatureUndefined: return "CurvatureUndefined";
    case ErrorCode::StraightPoint: return "StraightPoint";
    case ErrorCode::UnknownCheck: return "UnknownCheck";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can branch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dualcurve
