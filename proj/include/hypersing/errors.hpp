#pragma once

#include <stdexcept>
#include <string>

namespace hypersing {

/// Argument outside the mathematical domain of the operation (e.g. |r| >= 1
/// for an interior integral).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Interior argument too close to a crack tip for the requested formula.
class NearEndpointError : public DomainError {
public:
    using DomainError::DomainError;
};

/// No closed form, low-order polynomial or derivation path covers the query.
class UnsupportedCombination : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A general-m formula was requested below its stated validity threshold.
class BelowThresholdError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Numerical procedure could not certify its tolerance.
class ConvergenceFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SingularMatrixError : public std::runtime_error {
public:
    SingularMatrixError(const std::string& what, double condition)
        : std::runtime_error(what), condition_(condition) {}
    double condition() const noexcept { return condition_; }

private:
    double condition_;
};

}  // namespace hypersing
