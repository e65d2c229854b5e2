#include "polyratio/errors.hpp"

namespace polyratio {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DegenerateGeometry: return "DegenerateGeometry";
    case ErrorKind::GeneralPositionViolation: return "GeneralPositionViolation";
    case ErrorKind::ToleranceAmbiguity: return "ToleranceAmbiguity";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NotBasicSetup: return "NotBasicSetup";
    case ErrorKind::EpsilonTooLarge: return "EpsilonTooLarge";
    case ErrorKind::NotSimpleChain: return "NotSimpleChain";
    case ErrorKind::MissingDataFile: return "MissingDataFile";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::InitialEvaluationFailed: return "InitialEvaluationFailed";
    }
    return "UnknownError";
}

} // namespace polyratio
