#include "algebra/error.hpp"

namespace folres {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::UnknownVariable: return "UnknownVariable";
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::NotDivisible: return "NotDivisible";
        case ErrorCode::AllZero: return "AllZero";
        case ErrorCode::VariableCountMismatch: return "VariableCountMismatch";
        case ErrorCode::DegenerateFrame: return "DegenerateFrame";
        case ErrorCode::ZeroForm: return "ZeroForm";
        case ErrorCode::NotSingularAtOrigin: return "NotSingularAtOrigin";
        case ErrorCode::DegenerateLinearPart: return "DegenerateLinearPart";
        case ErrorCode::BranchNotInvariant: return "BranchNotInvariant";
        case ErrorCode::NonSmoothBranch: return "NonSmoothBranch";
        case ErrorCode::InsufficientTruncation: return "InsufficientTruncation";
        case ErrorCode::ResonanceObstruction: return "ResonanceObstruction";
        case ErrorCode::ZeroEigenvalue: return "ZeroEigenvalue";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::DicriticalDivisor: return "DicriticalDivisor";
        case ErrorCode::IndexUnavailable: return "IndexUnavailable";
        case ErrorCode::NotResolved: return "NotResolved";
        case ErrorCode::RadialNormalType: return "RadialNormalType";
        case ErrorCode::NotHomogeneous: return "NotHomogeneous";
        case ErrorCode::PointNotOnGamma: return "PointNotOnGamma";
        case ErrorCode::FrameNotTransversal: return "FrameNotTransversal";
        case ErrorCode::PointNotSingular: return "PointNotSingular";
        case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
        case ErrorCode::NormalFormFailure: return "NormalFormFailure";
        case ErrorCode::NotAnnihilated: return "NotAnnihilated";
        case ErrorCode::DivisionObstruction: return "DivisionObstruction";
        case ErrorCode::ZeroAtPoint: return "ZeroAtPoint";
        case ErrorCode::RankNotTwo: return "RankNotTwo";
        case ErrorCode::IntegrabilityFailure: return "IntegrabilityFailure";
        case ErrorCode::IdentityViolated: return "IdentityViolated";
        case ErrorCode::InternalInvariant: return "InternalInvariant";
        case ErrorCode::ExtensionCapExceeded: return "ExtensionCapExceeded";
        case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
        case ErrorCode::DepthCapHit: return "DepthCapHit";
    }
    return "Unknown";
}

ErrorCategory error_category(ErrorCode code) {
    switch (code) {
        case ErrorCode::IntegrabilityFailure:
        case ErrorCode::IdentityViolated:
        case ErrorCode::InternalInvariant:
        case ErrorCode::NotDivisible:
            return ErrorCategory::Internal;
        case ErrorCode::ExtensionCapExceeded:
        case ErrorCode::SearchBudgetExceeded:
        case ErrorCode::DepthCapHit:
            return ErrorCategory::Budget;
        default:
            return ErrorCategory::Input;
    }
}

}  // namespace folres
