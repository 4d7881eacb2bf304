#pragma once

#include "wmc/finite_diff.hpp"
#include "wmc/types.hpp"

namespace wmc {

// Immutable parametric patch X: [u0,u1]x[v0,v1] -> R^3 with derivative
// evaluators. `analytic` records whether the derivatives were supplied in
// closed form or synthesized from central differences of X.
struct ParametricSurface {
  PositionFn X;
  PositionFn Xu, Xv, Xuu, Xuv, Xvv;
  Domain domain;
  bool analytic = false;
};

// Wraps a bare position map; derivatives fall back to finite differences.
ParametricSurface make_surface(PositionFn X, Domain domain);

// Full analytic bundle.
ParametricSurface make_surface(PositionFn X, PositionFn Xu, PositionFn Xv,
                               PositionFn Xuu, PositionFn Xuv, PositionFn Xvv,
                               Domain domain);

// Same geometry with the derivative evaluators replaced by finite
// differences of X. Lets callers compare the two evaluation paths.
ParametricSurface with_fd_derivatives(const ParametricSurface& s);

// Rigid image u,v -> R*X(u,v) + t. Derivatives rotate, domain unchanged.
ParametricSurface transformed(const ParametricSurface& s, const Mat3& rotation,
                              const Vec3& translation);

Mat3 rotation_about_z(double angle);

// Max over an inclusive (nu x nv) grid of the relative gap between the
// surface's derivative evaluators and finite differences of X.
double derivative_mismatch(const ParametricSurface& s, int nu, int nv);

}  // namespace wmc
