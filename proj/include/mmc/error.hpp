#pragma once

#include <stdexcept>
#include <string>

namespace mmc {

enum class ErrorCode {
    // input errors (exit code 1)
    ParseError,
    DimensionMismatch,
    NotSimple,
    NotTrivalent,
    NotThreeConnected,
    Disconnected,
    GenusTooSmall,
    InvalidPairing,
    FacesNotDoubleCover,
    NotAGraphCurve,
    SingularMatrix,
    NonPositiveCoefficient,
    SearchBudgetExceeded,
    InvalidArgument,
    // negative mathematical results (exit code 2)
    NotPlanar,
    NoPositiveRoot,
    NotInSpan,
    NoFirstOrderLift,
    ZeroDiscriminant,
    SingularCubic,
    DegenerateFamily,
    // internal guards (exit code 3)
    DegenerateConfiguration,
    GenerationCheckFailed,
    HomDimensionMismatch,
    InconsistentDeformation,
    ZeroPairing,
    InternalError,
};

const char* error_code_name(ErrorCode code);

/// Process exit code for an error: 1 input, 2 negative result, 3 internal guard.
int exit_code_for(ErrorCode code);

class MmError : public std::runtime_error {
public:
    MmError(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code), detail_(what) {}

    ErrorCode code() const noexcept { return code_; }
    /// Message without the code prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

}  // namespace mmc
