#pragma once

#include <stdexcept>
#include <string>

namespace hopf {

enum class ErrorKind {
    DivisionByZero,
    FieldMismatch,
    NoSuchRoot,
    FailedToSplit,
    ShapeError,
    AlgebraMismatch,
    NotInvertible,
    ZeroCounitScalar,
    CounitNotOne,
    InvalidTwist,
    InternalInconsistency,
    AxiomFailure,
    NotUnimodular,
    DegenerateIntegralSpace,
    CoassociativityFailure,
    HypothesisViolation,
    PairingConditionFailure,
    FieldTooSmall,
    TraceCriterionInapplicable,
    GaloisFailure,
    NotGroupAlgebra,
    DegenerateTwist,
    SchurFailure,
    NotScalar,
    CocycleFailure,
    InvalidCayleyTable,
    DegeneracyDetected,
    NotASubalgebra,
    CharTwo,
    ParseError,
};

const char* to_string(ErrorKind kind);

/// Every failure in the library is reported through this exception type;
/// `kind()` is stable and machine-readable, `what()` carries context.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace hopf
