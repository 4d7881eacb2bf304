#pragma once

#include <functional>

#include "wmc/types.hpp"

namespace wmc {

// Weight e^phi on R^3, carried as the log-density phi and its gradient.
struct DensityField {
  enum class Kind { linear, gaussian, custom };

  Kind kind = Kind::custom;
  std::function<double(const Vec3&)> phi;
  std::function<Vec3(const Vec3&)> grad_phi;
  // Constant gradient vector; meaningful only when kind == Kind::linear.
  Vec3 a = Vec3::Zero();
};

// phi(p) = z, the canonical log-linear weight.
DensityField make_density_ez();

// phi(p) = -|p|^2/2. The usual (2 pi)^{-3/2} normalizer is dropped on
// purpose: only grad phi enters curvature, additive constants are inert.
DensityField make_density_gaussian();

// phi(p) = <a, p> for a nonzero constant vector a.
DensityField make_density_linear(const Vec3& a);

// Arbitrary smooth weight; grad_phi must differentiate phi.
DensityField make_density_custom(std::function<double(const Vec3&)> phi,
                                 std::function<Vec3(const Vec3&)> grad_phi);

// Max relative gap between grad_phi and central differences of phi over a
// small sample box around `center`. Validation aid for tests.
double density_gradient_mismatch(const DensityField& density, const Vec3& center);

}  // namespace wmc
