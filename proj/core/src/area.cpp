#include "wmc/area.hpp"

#include <cmath>
#include <sstream>

#include "wmc/curvature.hpp"
#include "wmc/errors.hpp"

namespace wmc {
namespace {

// Midpoint rule over nu x nv uniform cells spanning the domain.
double midpoint_sum(const Domain& domain, int nu, int nv,
                    const std::function<double(double, double)>& integrand) {
  const double du = domain.u.length() / nu;
  const double dv = domain.v.length() / nv;
  double sum = 0.0;
  for (int i = 0; i < nu; ++i) {
    const double u = domain.u.lo + (i + 0.5) * du;
    for (int j = 0; j < nv; ++j) {
      const double v = domain.v.lo + (j + 0.5) * dv;
      sum += integrand(u, v);
    }
  }
  return sum * du * dv;
}

double area_element(const ParametricSurface& s, double u, double v) {
  const double len = s.Xu(u, v).cross(s.Xv(u, v)).norm();
  if (len <= kDegenerateCross) {
    std::ostringstream msg;
    msg << "degenerate parametrization: |Xu x Xv| = " << len << " at (u, v) = (" << u
        << ", " << v << ")";
    throw DegenerateSurface(msg.str());
  }
  return len;
}

}  // namespace

double weighted_area(const ParametricSurface& s, const DensityField& density,
                     int nu, int nv) {
  if (nu < 2 || nv < 2) throw InvalidParams("weighted_area needs nu, nv >= 2");
  return midpoint_sum(s.domain, nu, nv, [&](double u, double v) {
    return std::exp(density.phi(s.X(u, v))) * area_element(s, u, v);
  });
}

VariationCheck first_variation_check(const ParametricSurface& s, const DensityField& density,
                                     const std::function<double(double, double)>& bump,
                                     double dt, int nu, int nv) {
  if (!(dt > 0)) throw InvalidParams("first_variation_check needs dt > 0");
  if (nu < 2 || nv < 2) throw InvalidParams("first_variation_check needs nu, nv >= 2");

  auto normal = [s](double u, double v) {
    const Vec3 cross = s.Xu(u, v).cross(s.Xv(u, v));
    const double len = cross.norm();
    if (len <= kDegenerateCross) {
      throw DegenerateSurface("degenerate base surface in first_variation_check");
    }
    return Vec3(cross / len);
  };

  auto area_at = [&](double t) {
    PositionFn Xt = [s, bump, normal, t](double u, double v) {
      return Vec3(s.X(u, v) + (t * bump(u, v)) * normal(u, v));
    };
    return weighted_area(make_surface(std::move(Xt), s.domain), density, nu, nv);
  };

  VariationCheck out;
  out.numeric_derivative = (area_at(dt) - area_at(-dt)) / (2.0 * dt);
  out.formula_value = midpoint_sum(s.domain, nu, nv, [&](double u, double v) {
    const CurvaturePair cp = weighted_mean_curvature(s, density, u, v);
    return -2.0 * cp.Hphi * bump(u, v) * std::exp(density.phi(s.X(u, v))) *
           area_element(s, u, v);
  });
  return out;
}

}  // namespace wmc
