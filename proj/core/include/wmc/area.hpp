#pragma once

#include <functional>

#include "wmc/density.hpp"
#include "wmc/surface.hpp"

namespace wmc {

// Midpoint-rule quadrature of e^{phi(X)} |Xu x Xv| over the domain on an
// (nu x nv) cell grid. O(h^2): doubling both counts cuts the error ~4x.
double weighted_area(const ParametricSurface& s, const DensityField& density,
                     int nu, int nv);

struct VariationCheck {
  double numeric_derivative = 0;  // d/dt weighted_area(X + t bump N) at t = 0
  double formula_value = 0;       // quadrature of -2 Hphi bump e^phi |Xu x Xv|
};

// Both sides use the same midpoint grid, so quadrature error cancels and the
// comparison isolates the curvature formula. Central difference is O(dt^2).
VariationCheck first_variation_check(const ParametricSurface& s, const DensityField& density,
                                     const std::function<double(double, double)>& bump,
                                     double dt, int nu, int nv);

}  // namespace wmc
