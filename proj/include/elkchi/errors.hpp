#pragma once

#include <stdexcept>
#include <string>

namespace elkchi {

enum class ErrorCode {
    ParseError,
    UnknownVariable,
    BadExponent,
    DimensionMismatch,
    BadInput,
    NotFinite,
    NonIsolatedZero,
    DegeneratePairing,
    ConstantTerm,
    NotWeightedHomogeneous,
    DfNonzeroAtOrigin,
    DEven,
    KExhausted,
    ParityViolation,
    ConsistencyFail,
    NegativeCount,
    ZeroOnMesh,
    Unstable,
    DegenerateTarget,
    HypothesisNotAsserted,
    Internal,
};

const char* error_code_name(ErrorCode code);

class EngineError : public std::runtime_error {
public:
    EngineError(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }
    const char* code_name() const { return error_code_name(code_); }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw EngineError(code, message);
}

} // namespace elkchi
