#pragma once

#include <functional>

#include "wmc/types.hpp"

namespace wmc {

// Composite 8-point Gauss-Legendre over [a, b] (b < a integrates backward),
// panel length capped at max_panel. Far more accuracy than the smooth,
// mildly oscillatory integrands used here require.
double gl_integrate(const std::function<double(double)>& f, double a, double b,
                    double max_panel = 0.25);

Vec3 gl_integrate3(const std::function<Vec3(double)>& f, double a, double b,
                   double max_panel = 0.25);

}  // namespace wmc
