#include "wmc/finite_diff.hpp"

#include <algorithm>
#include <cmath>

#include "wmc/errors.hpp"

namespace wmc {

Vec3 fd_first_u(const PositionFn& X, double u, double v, double h) {
  return (X(u + h, v) - X(u - h, v)) / (2.0 * h);
}

Vec3 fd_first_v(const PositionFn& X, double u, double v, double h) {
  return (X(u, v + h) - X(u, v - h)) / (2.0 * h);
}

Vec3 fd_second_uu(const PositionFn& X, double u, double v, double h) {
  return (X(u + h, v) - 2.0 * X(u, v) + X(u - h, v)) / (h * h);
}

Vec3 fd_second_uv(const PositionFn& X, double u, double v, double h) {
  return (X(u + h, v + h) - X(u + h, v - h) - X(u - h, v + h) + X(u - h, v - h)) /
         (4.0 * h * h);
}

Vec3 fd_second_vv(const PositionFn& X, double u, double v, double h) {
  return (X(u, v + h) - 2.0 * X(u, v) + X(u, v - h)) / (h * h);
}

SurfaceJet fd_derivatives(const PositionFn& X, double u, double v, double step) {
  if (!(step > 0)) throw InvalidParams("fd_derivatives requires step > 0");
  SurfaceJet j;
  j.Xu = fd_first_u(X, u, v, step);
  j.Xv = fd_first_v(X, u, v, step);
  j.Xuu = fd_second_uu(X, u, v, step);
  j.Xuv = fd_second_uv(X, u, v, step);
  j.Xvv = fd_second_vv(X, u, v, step);
  return j;
}

double fd_first_step(double u, double v) {
  return 1e-5 * std::max({1.0, std::abs(u), std::abs(v)});
}

double fd_second_step(double u, double v) {
  return 1e-4 * std::max({1.0, std::abs(u), std::abs(v)});
}

SurfaceJet scaled_fd_jet(const PositionFn& X, double u, double v) {
  const double h1 = fd_first_step(u, v);
  const double h2 = fd_second_step(u, v);
  SurfaceJet j;
  j.Xu = fd_first_u(X, u, v, h1);
  j.Xv = fd_first_v(X, u, v, h1);
  j.Xuu = fd_second_uu(X, u, v, h2);
  j.Xuv = fd_second_uv(X, u, v, h2);
  j.Xvv = fd_second_vv(X, u, v, h2);
  return j;
}

}  // namespace wmc
