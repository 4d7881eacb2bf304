#include "wmc/curve.hpp"

#include <utility>

#include "wmc/quadrature.hpp"

namespace wmc {

Curve integral_curve(std::function<Vec3(double)> d1, std::function<Vec3(double)> d2,
                     double anchor_u, const Vec3& anchor_point) {
  Curve c;
  c.d1 = d1;
  c.d2 = std::move(d2);
  c.value = [d1 = std::move(d1), anchor_u, anchor_point](double u) {
    return Vec3(anchor_point + gl_integrate3(d1, anchor_u, u));
  };
  return c;
}

Curve transformed_curve(const Curve& c, const Mat3& rotation, const Vec3& translation) {
  const Mat3 R = rotation;
  Curve out;
  out.value = [R, translation, f = c.value](double u) { return Vec3(R * f(u) + translation); };
  out.d1 = [R, f = c.d1](double u) { return Vec3(R * f(u)); };
  out.d2 = [R, f = c.d2](double u) { return Vec3(R * f(u)); };
  return out;
}

Curve rotated_curve(const Curve& c, const Mat3& rotation) {
  return transformed_curve(c, rotation, Vec3::Zero());
}

}  // namespace wmc
