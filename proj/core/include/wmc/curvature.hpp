#pragma once

#include <vector>

#include "wmc/density.hpp"
#include "wmc/surface.hpp"

namespace wmc {

// |Xu x Xv| at or below this means the parametrization is degenerate.
inline constexpr double kDegenerateCross = 1e-10;

struct FundamentalForms {
  double E = 0, F = 0, G = 0;  // first form
  double e = 0, f = 0, g = 0;  // second form against N
  Vec3 N = Vec3::Zero();       // unit normal (Xu x Xv)/|Xu x Xv|
};

FundamentalForms fundamental_forms(const ParametricSurface& s, double u, double v);

struct CurvaturePair {
  double H = 0;     // (eG - 2fF + gE) / (2(EG - F^2))
  double Hphi = 0;  // H - <grad phi, N>/2
};

CurvaturePair weighted_mean_curvature(const ParametricSurface& s,
                                      const DensityField& density, double u, double v);

struct ReportRecord {
  double u = 0, v = 0;
  Vec3 point = Vec3::Zero();
  double H = 0, Hphi = 0;
};

struct MinimalityReport {
  std::vector<ReportRecord> grid;  // row-major, u outer
  double max_abs_Hphi = 0;
  double mean_abs_Hphi = 0;
  double tolerance = 0;
  bool pass = false;
};

// Inclusive uniform (nu x nv) sample of the domain, assembled serially in
// index order so the result is reproducible run to run.
MinimalityReport minimality_report(const ParametricSurface& s, const DensityField& density,
                                   int nu, int nv, double tolerance);

}  // namespace wmc
