#pragma once

#include <functional>

#include "wmc/types.hpp"

namespace wmc {

// Space curve with evaluators for the value and first two derivatives.
struct Curve {
  std::function<Vec3(double)> value;
  std::function<Vec3(double)> d1;
  std::function<Vec3(double)> d2;
};

// Curve recovered from its derivative: value(u) = anchor_point + integral of
// d1 from anchor_u to u, by composite Gauss-Legendre quadrature.
Curve integral_curve(std::function<Vec3(double)> d1, std::function<Vec3(double)> d2,
                     double anchor_u, const Vec3& anchor_point);

// Rigid image: value -> R*value + t, derivatives rotate.
Curve transformed_curve(const Curve& c, const Mat3& rotation, const Vec3& translation);

// Rotation only, for direction fields.
Curve rotated_curve(const Curve& c, const Mat3& rotation);

// Scalar profile with two derivatives.
struct ScalarFunction {
  std::function<double(double)> value;
  std::function<double(double)> d1;
  std::function<double(double)> d2;
};

}  // namespace wmc
