#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace avinv {

// Exit codes used by the command-line tool, one per error family.
enum class ErrorFamily : int {
  Usage = 2,
  Input = 3,
  Numeric = 4,
  Certificate = 5,
  Network = 6,
  Verification = 7,
  Internal = 8,
};

enum class ErrorCode {
  // input validation
  NotMonic,
  DegreeZero,
  RootOffCircle,
  OddDegreeWithoutRealHandling,
  UnrecognizedSlopeMultiset,
  UnsupportedDegree,
  UnsupportedDimensionForVerdicts,
  UnexpectedRealRootPattern,
  IncompatibleContexts,
  InvalidCombination,
  MalformedCode,
  MalformedLabel,
  WeilValidationFailed,
  Usage,
  // numerics
  PrecisionExhausted,
  PairingAmbiguous,
  CollisionInOrbit,
  ResultantVanishesModPrecision,
  WildRamificationUnresolved,
  // certificates / internal consistency
  CertificateFailed,
  CalibrationMismatch,
  InternalRankMismatch,
  WeightPairingViolation,
  // network / cache
  NetworkUnavailable,
  RemoteMismatch,
  NotFound,
  // harness
  VerificationFailure,
};

std::string_view to_string(ErrorCode code);
ErrorFamily family_of(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  ErrorFamily family() const noexcept { return family_of(code_); }

 private:
  ErrorCode code_;
};

}  // namespace avinv
