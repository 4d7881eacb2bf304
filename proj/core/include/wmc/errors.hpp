#pragma once

#include <stdexcept>
#include <string>

namespace wmc {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// |Xu x Xv| fell below the degeneracy threshold somewhere it must not.
struct DegenerateSurface : Error {
  using Error::Error;
};

// A curve handed to a ruled-surface builder breaks a normalization
// precondition (unit speed, unit director, orthogonality).
struct NormalizationViolation : Error {
  using Error::Error;
};

// An operation that requires a density with constant gradient was given
// one whose gradient varies.
struct NonConstantGradient : Error {
  using Error::Error;
};

// Parameter values outside the documented range (A <= 0, b = 0, ...).
struct InvalidParams : Error {
  using Error::Error;
};

// Initial state for an ODE integration violates its constraints.
struct InvalidInit : Error {
  using Error::Error;
};

// A translation surface is not of the single-ruled forms this code
// can convert (neither profile is affine).
struct NotRuledForm : Error {
  using Error::Error;
};

// A profile function has a pole inside the requested parameter range.
struct PoleAt : Error {
  using Error::Error;
};

// Supplied analytic derivatives disagree with finite differences.
struct DerivativeMismatch : Error {
  using Error::Error;
};

// File or stream I/O failed.
struct IoError : Error {
  using Error::Error;
};

// Root bracketing failed: no sign change over the given interval.
struct NoSignChange : Error {
  using Error::Error;
};

// A quantity that must be constant over the surface is not.
struct SymmetryViolation : Error {
  using Error::Error;
};

}  // namespace wmc
