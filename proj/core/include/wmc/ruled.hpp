#pragma once

#include <string>
#include <vector>

#include "wmc/curve.hpp"
#include "wmc/density.hpp"
#include "wmc/surface.hpp"
#include "wmc/types.hpp"

namespace wmc {

// Surface swept by lines: X(u,v) = alpha(u) + v*beta(u). Valid instances
// keep |alpha'| = 1, |beta| = 1 and <alpha', beta> = 0 along u.
struct RuledSurface {
  Curve alpha;  // directrix
  Curve beta;   // director (unit ruling direction)
  Interval u_range;
  Interval v_range;

  // Analytic view: Xu = alpha' + v beta', Xv = beta, Xuu = alpha'' + v beta'',
  // Xuv = beta', Xvv = 0.
  ParametricSurface as_parametric() const;
};

// Validates the three normalization invariants on a 32-point u-sample
// (tolerance 1e-8 each) before packaging the curves.
RuledSurface build_ruled(Curve alpha, Curve beta, Interval u_range, Interval v_range);

struct RuledResiduals {
  double r1 = 0, r2 = 0, r3 = 0, r4 = 0;
};

// Coefficients of the cubic-in-v system whose joint vanishing along u is
// equivalent to Hphi = 0 on the ruling span, for constant grad phi:
//   r1 = <a'xb, a''> - <a'xb, grad>
//   r2 = <a'xb, b''> + <b'xb, a''> - <b'xb, grad> - 2<a',b'><a'xb, grad>
//   r3 = <b'xb, b''> - 2<a',b'><b'xb, grad> - |b'|^2 <a'xb, grad>
//   r4 = |b'|^2 <b'xb, grad>
RuledResiduals coefficient_residuals(const RuledSurface& rs, const DensityField& density,
                                     double u);

// Parameters of the closed-form cylindrical family that is minimal under
// the e^z weight.
struct CylindricalFamilyParams {
  double A = 1.0;  // integration constant, A > 0
  double b = 1.0;  // director (0, b, c) with b^2 + c^2 = 1, b != 0
  double c = 0.0;
  double rot_z = 0.0;          // rigid motion applied after construction
  Vec3 shift = Vec3::Zero();
};

RuledSurface make_cylindrical_minimal(const CylindricalFamilyParams& p, Interval v_range,
                                      Interval u_range = {-1.0, 1.0});

// Plane containing the vertical direction: alpha(u) = through + u*(d1,d2,0),
// beta = (0,0,1). Weighted-minimal under e^z for every direction and offset.
RuledSurface make_vertical_plane(const Eigen::Vector2d& direction_in_xy, const Vec3& through,
                                 Interval u_range = {-1.0, 1.0},
                                 Interval v_range = {-1.0, 1.0});

// Ruled surface whose director beta = cos(theta) e1 + sin(theta) e2(u) turns
// at rate omega (theta = omega*u + theta0) while the frame vector e2(u)
// precesses at rate eps around e1 = (1,0,0). For eps != 0, beta traces a
// non-planar spherical curve. Normalizations hold exactly by construction;
// positions come from closed-form product-to-sum antiderivatives, which is
// why omega != 0 and |omega| != |eps| are required.
RuledSurface make_rotating_director_ruled(double omega, double eps, double theta0,
                                          Interval u_range, Interval v_range);

struct CounterexampleEntry {
  std::string name;
  bool vertical_plane = false;  // vertical planes satisfy the system identically
  double max_residual = 0;      // max over sampled u of |r1|+|r2|+|r3|+|r4|
};

// Catalog of ruled surfaces with non-constant director, evaluated against
// the minimality system. Throws if an entry that is not a vertical plane
// fails to violate the system somewhere (that would contradict the
// classification this library is organized around).
std::vector<CounterexampleEntry> noncylindrical_counterexample_suite(const DensityField& density);

}  // namespace wmc
