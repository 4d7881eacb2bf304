#pragma once

#include <Eigen/Dense>

namespace wmc {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// Closed parameter interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  double length() const { return hi - lo; }
  double midpoint() const { return 0.5 * (lo + hi); }
  bool valid() const { return lo < hi; }
};

// Rectangular parameter domain for a surface patch.
struct Domain {
  Interval u;
  Interval v;
};

}  // namespace wmc
