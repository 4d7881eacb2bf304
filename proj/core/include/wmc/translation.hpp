#pragma once

#include <functional>
#include <utility>

#include "wmc/curve.hpp"
#include "wmc/ruled.hpp"
#include "wmc/surface.hpp"
#include "wmc/types.hpp"

namespace wmc {

// Graph z = g(u) + h(v) over a rectangle.
struct TranslationSurface {
  ScalarFunction g, h;
  Interval u_range, v_range;
  double d_shift = 0;  // the constant d when h(v) = c*v + d

  // Analytic view: Xu = (1,0,g'), Xv = (0,1,h'), Xuu = (0,0,g''), Xuv = 0,
  // Xvv = (0,0,h'').
  ParametricSurface as_parametric() const;
};

// Validates the supplied derivatives against central differences (1e-6
// relative on a sample grid) before packaging.
TranslationSurface build_translation(ScalarFunction g, ScalarFunction h,
                                     Interval u_range, Interval v_range,
                                     double d_shift = 0);

// g''(1 + h'^2) + h''(1 + g'^2) - (1 + g'^2 + h'^2). Vanishes exactly where
// the surface is weighted-minimal under e^z; see the consistency identity
// residual = 2 (1 + g'^2 + h'^2)^{3/2} Hphi.
double pde_residual(const TranslationSurface& ts, double u, double v);

// -(1 + c^2) log|cos((u + D)/sqrt(1 + c^2))|.
double scherk_density_profile(double c, double D, double u);

// Minimal translation surface z = scherk_density_profile(c, D, u) + c v + d.
// The u-range must stay clear of the profile's poles.
TranslationSurface make_translation_minimal(double c, double D, double d,
                                            Interval u_range, Interval v_range);

struct RuledConversion {
  RuledSurface surface;
  // Chart change (u,v) of the translation graph -> (sigma, t) of the ruled
  // surface, landing on the same point of space.
  std::function<std::pair<double, double>(double, double)> parameter_map;
  double slope = 0;      // c when h is affine, a when g is affine
  bool h_affine = true;  // which summand was affine
};

// Rewrites a translation surface with an affine summand as a ruled surface.
// The directrix is the unit-speed orthogonal trajectory of the rulings, so
// the result passes build_ruled validation; parameter_map recovers the
// pointwise correspondence.
RuledConversion to_ruled(const TranslationSurface& ts);

struct GridSpec {
  Domain domain;
  int nu = 21, nv = 21;
};

enum class Theorem2Verdict { minimal_g_affine, minimal_h_affine, not_minimal };

const char* to_string(Theorem2Verdict v);

// Numerical dichotomy: a surface minimal on the grid must have one affine
// summand. Throws if the grid residual vanishes with both summands curved,
// which no input should be able to produce.
Theorem2Verdict theorem2_check(const ScalarFunction& g, const ScalarFunction& h,
                               const GridSpec& grid);

}  // namespace wmc
