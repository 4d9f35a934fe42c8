#include "mmc/error.hpp"

namespace mmc {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::NotTrivalent: return "NotTrivalent";
    case ErrorCode::NotThreeConnected: return "Not3Connected";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::GenusTooSmall: return "GenusTooSmall";
    case ErrorCode::InvalidPairing: return "InvalidPairing";
    case ErrorCode::FacesNotDoubleCover: return "FacesNotDoubleCover";
    case ErrorCode::NotAGraphCurve: return "NotAGraphCurve";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NonPositiveCoefficient: return "NonPositiveCoefficient";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotPlanar: return "NotPlanar";
    case ErrorCode::NoPositiveRoot: return "NoPositiveRoot";
    case ErrorCode::NotInSpan: return "NotInSpan";
    case ErrorCode::NoFirstOrderLift: return "NoFirstOrderLift";
    case ErrorCode::ZeroDiscriminant: return "ZeroDiscriminant";
    case ErrorCode::SingularCubic: return "SingularCubic";
    case ErrorCode::DegenerateFamily: return "DegenerateFamily";
    case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorCode::GenerationCheckFailed: return "GenerationCheckFailed";
    case ErrorCode::HomDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InconsistentDeformation: return "InconsistentDeformation";
    case ErrorCode::ZeroPairing: return "ZeroPairing";
    case ErrorCode::InternalError: return "InternalError";
    }
    return "Unknown";
}

int exit_code_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::NotPlanar:
    case ErrorCode::NoPositiveRoot:
    case ErrorCode::NotInSpan:
    case ErrorCode::NoFirstOrderLift:
    case ErrorCode::ZeroDiscriminant:
    case ErrorCode::SingularCubic:
    case ErrorCode::DegenerateFamily:
        return 2;
    case ErrorCode::DegenerateConfiguration:
    case ErrorCode::GenerationCheckFailed:
    case ErrorCode::HomDimensionMismatch:
    case ErrorCode::InconsistentDeformation:
    case ErrorCode::ZeroPairing:
    case ErrorCode::InternalError:
        return 3;
    default:
        return 1;
    }
}

}  // namespace mmc
