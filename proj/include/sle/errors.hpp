#ifndef SLE_ERRORS_HPP
#define SLE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sle {

// Precondition on a formula's domain violated (negative sqrt argument,
// kappa out of range, alpha at the 2*alpha-1 pole, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A Gamma argument landed on a nonpositive integer, or a hypergeometric
// c-parameter did. Surfaced, never regularized.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

// The boundary-solution existence condition t <= 3(4+kappa)^2/(32 kappa)
// does not hold.
class ConditionError : public DomainError {
public:
    using DomainError::DomainError;
};

// A series failed to converge within the iteration budget.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A numeric optimizer could not bracket or refine its extremum.
class OptimizationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An SDE step would leave the admissible region (r <= 1).
class StepSizeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace sle

#endif
