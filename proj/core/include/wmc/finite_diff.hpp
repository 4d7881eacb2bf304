#pragma once

#include <functional>

#include "wmc/types.hpp"

namespace wmc {

using PositionFn = std::function<Vec3(double, double)>;

// First and second partial derivatives of a surface map at one point.
struct SurfaceJet {
  Vec3 Xu, Xv, Xuu, Xuv, Xvv;
};

// Individual central-difference stencils: 2-point firsts, 3-point pure
// seconds, 4-corner mixed. Exact on quadratics up to round-off.
Vec3 fd_first_u(const PositionFn& X, double u, double v, double h);
Vec3 fd_first_v(const PositionFn& X, double u, double v, double h);
Vec3 fd_second_uu(const PositionFn& X, double u, double v, double h);
Vec3 fd_second_uv(const PositionFn& X, double u, double v, double h);
Vec3 fd_second_vv(const PositionFn& X, double u, double v, double h);

// All five derivatives with a single caller-chosen step.
SurfaceJet fd_derivatives(const PositionFn& X, double u, double v, double step);

// Steps used by the fallback derivative evaluators, scaled away from the
// origin to balance truncation against round-off at double precision.
double fd_first_step(double u, double v);   // 1e-5 * max(1, |u|, |v|)
double fd_second_step(double u, double v);  // 1e-4 * max(1, |u|, |v|)

// Fallback jet: firsts with fd_first_step, seconds with fd_second_step.
SurfaceJet scaled_fd_jet(const PositionFn& X, double u, double v);

}  // namespace wmc
