#include "wmc/surface.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "wmc/errors.hpp"

namespace wmc {

ParametricSurface make_surface(PositionFn X, Domain domain) {
  if (!domain.u.valid() || !domain.v.valid()) {
    throw InvalidParams("surface domain intervals must satisfy lo < hi");
  }
  ParametricSurface s;
  s.X = std::move(X);
  s.domain = domain;
  s.analytic = false;
  const PositionFn fn = s.X;
  s.Xu = [fn](double u, double v) { return fd_first_u(fn, u, v, fd_first_step(u, v)); };
  s.Xv = [fn](double u, double v) { return fd_first_v(fn, u, v, fd_first_step(u, v)); };
  s.Xuu = [fn](double u, double v) { return fd_second_uu(fn, u, v, fd_second_step(u, v)); };
  s.Xuv = [fn](double u, double v) { return fd_second_uv(fn, u, v, fd_second_step(u, v)); };
  s.Xvv = [fn](double u, double v) { return fd_second_vv(fn, u, v, fd_second_step(u, v)); };
  return s;
}

ParametricSurface make_surface(PositionFn X, PositionFn Xu, PositionFn Xv,
                               PositionFn Xuu, PositionFn Xuv, PositionFn Xvv,
                               Domain domain) {
  if (!domain.u.valid() || !domain.v.valid()) {
    throw InvalidParams("surface domain intervals must satisfy lo < hi");
  }
  ParametricSurface s;
  s.X = std::move(X);
  s.Xu = std::move(Xu);
  s.Xv = std::move(Xv);
  s.Xuu = std::move(Xuu);
  s.Xuv = std::move(Xuv);
  s.Xvv = std::move(Xvv);
  s.domain = domain;
  s.analytic = true;
  return s;
}

ParametricSurface with_fd_derivatives(const ParametricSurface& s) {
  return make_surface(s.X, s.domain);
}

ParametricSurface transformed(const ParametricSurface& s, const Mat3& rotation,
                              const Vec3& translation) {
  const Mat3 R = rotation;
  auto rotate = [R](const PositionFn& f) {
    return PositionFn([R, f](double u, double v) { return Vec3(R * f(u, v)); });
  };
  ParametricSurface out;
  out.X = [R, translation, f = s.X](double u, double v) {
    return Vec3(R * f(u, v) + translation);
  };
  out.Xu = rotate(s.Xu);
  out.Xv = rotate(s.Xv);
  out.Xuu = rotate(s.Xuu);
  out.Xuv = rotate(s.Xuv);
  out.Xvv = rotate(s.Xvv);
  out.domain = s.domain;
  out.analytic = s.analytic;
  return out;
}

Mat3 rotation_about_z(double angle) {
  return Eigen::AngleAxisd(angle, Vec3::UnitZ()).toRotationMatrix();
}

double derivative_mismatch(const ParametricSurface& s, int nu, int nv) {
  if (nu < 2 || nv < 2) throw InvalidParams("derivative_mismatch needs nu, nv >= 2");
  const double du = s.domain.u.length() / (nu - 1);
  const double dv = s.domain.v.length() / (nv - 1);
  double worst = 0.0;
  auto gap = [&worst](const Vec3& supplied, const Vec3& fd) {
    const double rel = (supplied - fd).norm() / std::max(1.0, supplied.norm());
    worst = std::max(worst, rel);
  };
  for (int i = 0; i < nu; ++i) {
    const double u = s.domain.u.lo + i * du;
    for (int j = 0; j < nv; ++j) {
      const double v = s.domain.v.lo + j * dv;
      const SurfaceJet jet = scaled_fd_jet(s.X, u, v);
      gap(s.Xu(u, v), jet.Xu);
      gap(s.Xv(u, v), jet.Xv);
      gap(s.Xuu(u, v), jet.Xuu);
      gap(s.Xuv(u, v), jet.Xuv);
      gap(s.Xvv(u, v), jet.Xvv);
    }
  }
  return worst;
}

}  // namespace wmc
