#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tdlc {

/// Names the invariant a failed operation violated. The CLI maps every
/// code except Internal to exit status 2.
enum class ErrorCode {
  InvalidInput,
  CompositionNonZero,
  NotClosed,
  DegreeOutOfRange,
  NotSubcomplex,
  NotSymmetric,
  GeneratorInO,
  NotInjective,
  NotHomomorphism,
  Disconnected,
  NotUnimodular,
  RelationViolated,
  NotInvertible,
  StateExplosion,
  NotAProductOfTAnalogues,
  WFinite,
  PosetTooLarge,
  UnknownIndex,
  Internal,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::CompositionNonZero: return "CompositionNonZero";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::NotSubcomplex: return "NotSubcomplex";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::GeneratorInO: return "GeneratorInO";
    case ErrorCode::NotInjective: return "NotInjective";
    case ErrorCode::NotHomomorphism: return "NotHomomorphism";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::RelationViolated: return "RelationViolated";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::StateExplosion: return "StateExplosion";
    case ErrorCode::NotAProductOfTAnalogues: return "NotAProductOfTAnalogues";
    case ErrorCode::WFinite: return "WFinite";
    case ErrorCode::PosetTooLarge: return "PosetTooLarge";
    case ErrorCode::UnknownIndex: return "UnknownIndex";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tdlc
