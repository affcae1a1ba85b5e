#pragma once

#include <stdexcept>
#include <string>

namespace fracairy {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Series/iteration did not converge within its term or iteration cap.
struct NonConvergence : Error { using Error::Error; };
// Picard iteration exhausted max_iter.
struct NoConvergence : Error { using Error::Error; };
// Adaptive contour/panel quadrature failed to converge.
struct QuadratureFailure : Error { using Error::Error; };
// Argument lies outside the validity sector of the decay estimate.
struct SectorViolation : Error { using Error::Error; };
// Fractional order outside (0,1).
struct OrderOutOfRange : Error { using Error::Error; };
// Evaluation point outside a kernel's domain (t <= 0, V branch at x < 0, ...).
struct DomainError : Error { using Error::Error; };
// Second-derivative boundary potential requested at its anchor point.
struct SingularPoint : Error { using Error::Error; };
// Error estimator exceeded tolerance within the refinement budget.
struct GridTooCoarse : Error { using Error::Error; };
// Operation has no defined value (e.g. left limit of the V-branch jump).
struct Unsupported : Error { using Error::Error; };
// Instantaneous system matrix is not invertible.
struct SingularMatrix : Error { using Error::Error; };
// Marching values exceeded the overflow guard.
struct Instability : Error { using Error::Error; };
// Boundary data incompatible with the zero initial condition.
struct IncompatibleData : Error { using Error::Error; };
// Bad run configuration (CLI/config file level).
struct ConfigError : Error { using Error::Error; };

} // namespace fracairy
