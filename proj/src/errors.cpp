#include "avinv/errors.hpp"

namespace avinv {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::RootOffCircle: return "RootOffCircle";
    case ErrorCode::OddDegreeWithoutRealHandling: return "OddDegreeWithoutRealHandling";
    case ErrorCode::UnrecognizedSlopeMultiset: return "UnrecognizedSlopeMultiset";
    case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::UnsupportedDimensionForVerdicts: return "UnsupportedDimensionForVerdicts";
    case ErrorCode::UnexpectedRealRootPattern: return "UnexpectedRealRootPattern";
    case ErrorCode::IncompatibleContexts: return "IncompatibleContexts";
    case ErrorCode::InvalidCombination: return "InvalidCombination";
    case ErrorCode::MalformedCode: return "MalformedCode";
    case ErrorCode::MalformedLabel: return "MalformedLabel";
    case ErrorCode::WeilValidationFailed: return "WeilValidationFailed";
    case ErrorCode::Usage: return "Usage";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::PairingAmbiguous: return "PairingAmbiguous";
    case ErrorCode::CollisionInOrbit: return "CollisionInOrbit";
    case ErrorCode::ResultantVanishesModPrecision: return "ResultantVanishesModPrecision";
    case ErrorCode::WildRamificationUnresolved: return "WildRamificationUnresolved";
    case ErrorCode::CertificateFailed: return "CertificateFailed";
    case ErrorCode::CalibrationMismatch: return "CalibrationMismatch";
    case ErrorCode::InternalRankMismatch: return "InternalRankMismatch";
    case ErrorCode::WeightPairingViolation: return "WeightPairingViolation";
    case ErrorCode::NetworkUnavailable: return "NetworkUnavailable";
    case ErrorCode::RemoteMismatch: return "RemoteMismatch";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::VerificationFailure: return "VerificationFailure";
  }
  return "Unknown";
}

ErrorFamily family_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::Usage:
    case ErrorCode::InvalidCombination:
      return ErrorFamily::Usage;
    case ErrorCode::NotMonic:
    case ErrorCode::DegreeZero:
    case ErrorCode::RootOffCircle:
    case ErrorCode::OddDegreeWithoutRealHandling:
    case ErrorCode::UnrecognizedSlopeMultiset:
    case ErrorCode::UnsupportedDegree:
    case ErrorCode::UnsupportedDimensionForVerdicts:
    case ErrorCode::UnexpectedRealRootPattern:
    case ErrorCode::IncompatibleContexts:
    case ErrorCode::MalformedCode:
    case ErrorCode::MalformedLabel:
    case ErrorCode::WeilValidationFailed:
      return ErrorFamily::Input;
    case ErrorCode::PrecisionExhausted:
    case ErrorCode::PairingAmbiguous:
    case ErrorCode::CollisionInOrbit:
    case ErrorCode::ResultantVanishesModPrecision:
    case ErrorCode::WildRamificationUnresolved:
      return ErrorFamily::Numeric;
    case ErrorCode::CertificateFailed:
    case ErrorCode::CalibrationMismatch:
    case ErrorCode::WeightPairingViolation:
      return ErrorFamily::Certificate;
    case ErrorCode::InternalRankMismatch:
      return ErrorFamily::Internal;
    case ErrorCode::NetworkUnavailable:
    case ErrorCode::RemoteMismatch:
    case ErrorCode::NotFound:
      return ErrorFamily::Network;
    case ErrorCode::VerificationFailure:
      return ErrorFamily::Verification;
  }
  return ErrorFamily::Internal;
}

}  // namespace avinv
