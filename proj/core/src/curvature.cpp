#include "wmc/curvature.hpp"

#include <cmath>
#include <sstream>

#include "wmc/errors.hpp"

namespace wmc {

FundamentalForms fundamental_forms(const ParametricSurface& s, double u, double v) {
  const Vec3 Xu = s.Xu(u, v);
  const Vec3 Xv = s.Xv(u, v);
  const Vec3 cross = Xu.cross(Xv);
  const double len = cross.norm();
  if (len <= kDegenerateCross) {
    std::ostringstream msg;
    msg << "degenerate parametrization: |Xu x Xv| = " << len << " at (u, v) = (" << u
        << ", " << v << ")";
    throw DegenerateSurface(msg.str());
  }
  FundamentalForms ff;
  ff.N = cross / len;
  ff.E = Xu.dot(Xu);
  ff.F = Xu.dot(Xv);
  ff.G = Xv.dot(Xv);
  ff.e = ff.N.dot(s.Xuu(u, v));
  ff.f = ff.N.dot(s.Xuv(u, v));
  ff.g = ff.N.dot(s.Xvv(u, v));
  return ff;
}

CurvaturePair weighted_mean_curvature(const ParametricSurface& s,
                                      const DensityField& density, double u, double v) {
  const FundamentalForms ff = fundamental_forms(s, u, v);
  const double denom = ff.E * ff.G - ff.F * ff.F;
  CurvaturePair out;
  out.H = (ff.e * ff.G - 2.0 * ff.f * ff.F + ff.g * ff.E) / (2.0 * denom);
  out.Hphi = out.H - 0.5 * density.grad_phi(s.X(u, v)).dot(ff.N);
  return out;
}

MinimalityReport minimality_report(const ParametricSurface& s, const DensityField& density,
                                   int nu, int nv, double tolerance) {
  if (nu < 2 || nv < 2) throw InvalidParams("minimality_report needs nu, nv >= 2");
  if (!(tolerance > 0)) throw InvalidParams("minimality_report needs tolerance > 0");
  MinimalityReport rep;
  rep.tolerance = tolerance;
  rep.grid.reserve(static_cast<std::size_t>(nu) * nv);
  const double du = s.domain.u.length() / (nu - 1);
  const double dv = s.domain.v.length() / (nv - 1);
  double sum_abs = 0.0;
  double max_abs = 0.0;
  for (int i = 0; i < nu; ++i) {
    const double u = s.domain.u.lo + i * du;
    for (int j = 0; j < nv; ++j) {
      const double v = s.domain.v.lo + j * dv;
      const CurvaturePair cp = weighted_mean_curvature(s, density, u, v);
      rep.grid.push_back({u, v, s.X(u, v), cp.H, cp.Hphi});
      sum_abs += std::abs(cp.Hphi);
      max_abs = std::max(max_abs, std::abs(cp.Hphi));
    }
  }
  rep.max_abs_Hphi = max_abs;
  rep.mean_abs_Hphi = sum_abs / static_cast<double>(rep.grid.size());
  rep.pass = max_abs < tolerance;
  return rep;
}

}  // namespace wmc
