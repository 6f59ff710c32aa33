#pragma once

#include <stdexcept>
#include <string>

namespace folres {

enum class ErrorCode {
    // input / precondition errors
    SyntaxError,
    UnknownVariable,
    InvalidInput,
    PreconditionViolated,
    NotDivisible,
    AllZero,
    VariableCountMismatch,
    DegenerateFrame,
    ZeroForm,
    NotSingularAtOrigin,
    DegenerateLinearPart,
    BranchNotInvariant,
    NonSmoothBranch,
    InsufficientTruncation,
    ResonanceObstruction,
    ZeroEigenvalue,
    FieldMismatch,
    DicriticalDivisor,
    IndexUnavailable,
    NotResolved,
    RadialNormalType,
    NotHomogeneous,
    PointNotOnGamma,
    FrameNotTransversal,
    PointNotSingular,
    DimensionTooSmall,
    NormalFormFailure,
    NotAnnihilated,
    DivisionObstruction,
    ZeroAtPoint,
    RankNotTwo,
    // internal invariant violations
    IntegrabilityFailure,
    IdentityViolated,
    InternalInvariant,
    // budgets and caps
    ExtensionCapExceeded,
    SearchBudgetExceeded,
    DepthCapHit,
};

enum class ErrorCategory { Input, Internal, Budget };

const char* error_code_name(ErrorCode code);
ErrorCategory error_category(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Error carrying the order at which the separatrix recurrence broke down.
class ResonanceError : public Error {
public:
    explicit ResonanceError(int order)
        : Error(ErrorCode::ResonanceObstruction,
                "resonance obstruction at order " + std::to_string(order)),
          order_(order) {}

    int order() const noexcept { return order_; }

private:
    int order_;
};

}  // namespace folres
