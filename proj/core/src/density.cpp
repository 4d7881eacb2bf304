#include "wmc/density.hpp"

#include <algorithm>
#include <cmath>

#include "wmc/errors.hpp"

namespace wmc {

DensityField make_density_ez() { return make_density_linear(Vec3(0, 0, 1)); }

DensityField make_density_gaussian() {
  DensityField d;
  d.kind = DensityField::Kind::gaussian;
  d.phi = [](const Vec3& p) { return -0.5 * p.squaredNorm(); };
  d.grad_phi = [](const Vec3& p) { return Vec3(-p); };
  return d;
}

DensityField make_density_linear(const Vec3& a) {
  if (a.isZero(0.0)) {
    throw InvalidParams("linear density requires a nonzero gradient vector");
  }
  DensityField d;
  d.kind = DensityField::Kind::linear;
  d.a = a;
  d.phi = [a](const Vec3& p) { return a.dot(p); };
  d.grad_phi = [a](const Vec3&) { return a; };
  return d;
}

DensityField make_density_custom(std::function<double(const Vec3&)> phi,
                                 std::function<Vec3(const Vec3&)> grad_phi) {
  DensityField d;
  d.kind = DensityField::Kind::custom;
  d.phi = std::move(phi);
  d.grad_phi = std::move(grad_phi);
  return d;
}

double density_gradient_mismatch(const DensityField& density, const Vec3& center) {
  // Probe the center and small offsets along each axis pair.
  const Vec3 probes[5] = {center,
                          center + Vec3(0.37, 0, 0),
                          center + Vec3(0, -0.21, 0.11),
                          center + Vec3(-0.13, 0.29, 0),
                          center + Vec3(0.05, 0.07, -0.31)};
  double worst = 0.0;
  for (const Vec3& p : probes) {
    const Vec3 grad = density.grad_phi(p);
    for (int axis = 0; axis < 3; ++axis) {
      const double h = 1e-5 * std::max(1.0, std::abs(p[axis]));
      Vec3 hi = p, lo = p;
      hi[axis] += h;
      lo[axis] -= h;
      const double fd = (density.phi(hi) - density.phi(lo)) / (2.0 * h);
      const double rel = std::abs(fd - grad[axis]) / std::max(1.0, std::abs(grad[axis]));
      worst = std::max(worst, rel);
    }
  }
  return worst;
}

}  // namespace wmc
