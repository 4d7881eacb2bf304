#pragma once

#include <limits>
#include <vector>

#include "wmc/types.hpp"

namespace wmc {

struct OdeSample {
  double u = 0;
  Vec3 position = Vec3::Zero();
  Vec3 velocity = Vec3::Zero();
};

struct OdeSolution {
  std::vector<OdeSample> samples;  // from u = 0 to u_end inclusive
  double step = 0;
  double b = 0, c = 0;
  // Family constant of the closed-form seed when known, NaN otherwise.
  double A = std::numeric_limits<double>::quiet_NaN();
};

// Fixed-step classical RK4 for the directrix system
//   x'' = -x'z',  y'' = -y'z' - cb,  z'' = b^2 - z'^2
// integrated from u = 0 to u_end (either sign). The exact flow conserves
// |velocity| = 1; RK4 drifts only at O(step^4).
OdeSolution integrate_directrix(double b, double c, const Vec3& init_pos,
                                const Vec3& init_vel, double u_end, double step);

struct DirectrixState {
  Vec3 position = Vec3::Zero();
  Vec3 velocity = Vec3::Zero();
};

// Closed-form directrix of the cylindrical minimal family:
//   x = (2/b) atan(sqrt(A) e^{bu}),  z = log(e^{-bu} + A e^{bu}),  y = -(c/b) z.
// The velocity is unit-norm exactly via 4Ae^{2bu} + (Ae^{2bu}-1)^2 = (Ae^{2bu}+1)^2,
// and the curve stays on the plane by + cz = 0.
DirectrixState closed_form_directrix(double A, double b, double c, double u);

}  // namespace wmc
