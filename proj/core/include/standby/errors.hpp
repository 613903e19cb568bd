#pragma once

#include <stdexcept>
#include <string>

namespace standby {

/// Argument outside the mathematical domain of an operation (negative time,
/// nonpositive rate, malformed composition).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Survival probability underflows to zero at the requested time, so ratios
/// such as the hazard rate or mean residual life are undefined there.
class BeyondSupport : public DomainError {
public:
    using DomainError::DomainError;
};

/// Operation invoked on inputs that violate its documented precondition
/// (for example an MRL extremum requested for a monotone hazard).
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Quadrature or root finding failed to reach its tolerance.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace standby
