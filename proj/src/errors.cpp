#include "elkchi/errors.hpp"

namespace elkchi {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::UnknownVariable: return "UNKNOWN_VARIABLE";
    case ErrorCode::BadExponent: return "BAD_EXPONENT";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::BadInput: return "BAD_INPUT";
    case ErrorCode::NotFinite: return "NOT_FINITE";
    case ErrorCode::NonIsolatedZero: return "NON_ISOLATED_ZERO";
    case ErrorCode::DegeneratePairing: return "DEGENERATE_PAIRING";
    case ErrorCode::ConstantTerm: return "CONSTANT_TERM";
    case ErrorCode::NotWeightedHomogeneous: return "NOT_WEIGHTED_HOMOGENEOUS";
    case ErrorCode::DfNonzeroAtOrigin: return "DF_NONZERO_AT_ORIGIN";
    case ErrorCode::DEven: return "D_EVEN";
    case ErrorCode::KExhausted: return "K_EXHAUSTED";
    case ErrorCode::ParityViolation: return "PARITY_VIOLATION";
    case ErrorCode::ConsistencyFail: return "CONSISTENCY_FAIL";
    case ErrorCode::NegativeCount: return "NEGATIVE_COUNT";
    case ErrorCode::ZeroOnMesh: return "ZERO_ON_MESH";
    case ErrorCode::Unstable: return "UNSTABLE";
    case ErrorCode::DegenerateTarget: return "DEGENERATE_TARGET";
    case ErrorCode::HypothesisNotAsserted: return "HYPOTHESIS_NOT_ASSERTED";
    case ErrorCode::Internal: return "INTERNAL";
    }
    return "UNKNOWN";
}

} // namespace elkchi
