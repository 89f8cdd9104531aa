#pragma once

#include <stdexcept>
#include <string>

namespace nullwave {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Iterative solver failed to reach tolerance within the iteration cap.
struct NoConvergence : Error {
  using Error::Error;
};

// Newton step hit a (numerically) singular Jacobian.
struct SingularJacobian : Error {
  using Error::Error;
};

// Matrix expected to be symmetric positive definite is not.
struct NotSPD : Error {
  using Error::Error;
};

// Scalar function evaluated outside its domain (log of nonpositive,
// division by zero, fractional power of a negative base, or outside a
// tabulated interval).
struct DomainError : Error {
  using Error::Error;
};

// Material construction given a nonpositive bulk modulus or shear speed.
struct NonPositiveModulus : Error {
  using Error::Error;
};

// Closed-form and finite-difference tensor routes disagree beyond tolerance.
struct RouteMismatch : Error {
  using Error::Error;
};

// Extracted tensor violates the pair symmetries beyond tolerance.
struct AsymmetryTooLarge : Error {
  using Error::Error;
};

// Plane waves combined in an operation do not share a propagation direction.
struct DirectionMismatch : Error {
  using Error::Error;
};

// Operation on a discrete state requires time derivatives that are not
// available (no PDE closure supplied).
struct NeedsTimeDerivative : Error {
  using Error::Error;
};

// Operator evaluation at a point where it is singular (r = 0).
struct SingularPoint : Error {
  using Error::Error;
};

// A field or diagnostic became NaN/Inf during time stepping.
struct NonFinite : Error {
  using Error::Error;
};

// Bad user input: malformed expression, spec file, or configuration.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace nullwave
