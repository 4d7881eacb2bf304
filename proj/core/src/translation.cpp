#include "wmc/translation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "wmc/errors.hpp"
#include "wmc/quadrature.hpp"

namespace wmc {
namespace {

constexpr int kProfileSamples = 33;

double sample_at(Interval r, int k, int n) { return r.lo + k * r.length() / (n - 1); }

// Largest |d2| over an inclusive sample of the range.
double max_abs_d2(const ScalarFunction& f, Interval r) {
  double worst = 0.0;
  for (int k = 0; k < kProfileSamples; ++k) {
    worst = std::max(worst, std::abs(f.d2(sample_at(r, k, kProfileSamples))));
  }
  return worst;
}

void validate_profile(const ScalarFunction& f, Interval r, const char* name) {
  constexpr double kRelTol = 1e-6;
  constexpr int kSamples = 17;
  for (int k = 0; k < kSamples; ++k) {
    const double x = sample_at(r, k, kSamples);
    const double h = 1e-5 * std::max(1.0, std::abs(x));
    const double fd1 = (f.value(x + h) - f.value(x - h)) / (2.0 * h);
    const double fd2 = (f.d1(x + h) - f.d1(x - h)) / (2.0 * h);
    const double d1 = f.d1(x);
    const double d2 = f.d2(x);
    if (std::abs(fd1 - d1) > kRelTol * std::max(1.0, std::abs(d1))) {
      std::ostringstream msg;
      msg << name << "' disagrees with finite differences of " << name << " at " << x
          << ": supplied " << d1 << ", measured " << fd1;
      throw DerivativeMismatch(msg.str());
    }
    if (std::abs(fd2 - d2) > kRelTol * std::max(1.0, std::abs(d2))) {
      std::ostringstream msg;
      msg << name << "'' disagrees with finite differences of " << name << "' at " << x
          << ": supplied " << d2 << ", measured " << fd2;
      throw DerivativeMismatch(msg.str());
    }
  }
}

double residual_from(const ScalarFunction& g, const ScalarFunction& h, double u, double v) {
  const double gp = g.d1(u), hp = h.d1(v);
  return g.d2(u) * (1.0 + hp * hp) + h.d2(v) * (1.0 + gp * gp) -
         (1.0 + gp * gp + hp * hp);
}

// Shared core of to_ruled. `f` is the curved profile over I, the other
// summand is affine with the given slope and offset; J is the affine
// variable's range. When h_affine, the profile runs along u and the rulings
// along (0, 1, slope); otherwise the roles of the axes swap.
RuledConversion convert_affine(const ScalarFunction& f, Interval I, Interval J,
                               double slope, double offset, bool h_affine) {
  const double k2 = 1.0 + slope * slope;
  const double k = std::sqrt(k2);

  // Orthogonal trajectory of the rulings inside the surface: at profile
  // parameter p the ruling through the directrix sits at affine coordinate
  // w*(p) = -slope * f(p) / k2, which makes the trajectory's tangent
  // perpendicular to the ruling direction.
  auto wstar = [f, slope, k2](double p) { return -slope * f.value(p) / k2; };

  auto point = [f, k2, offset, h_affine, wstar](double p) {
    const double w = wstar(p);
    const double z = f.value(p) / k2 + offset;
    return h_affine ? Vec3(p, w, z) : Vec3(w, p, z);
  };
  auto tangent = [f, slope, k2, h_affine](double p) {
    const double fp = f.d1(p);
    const double w1 = -slope * fp / k2;
    return h_affine ? Vec3(1.0, w1, fp / k2) : Vec3(w1, 1.0, fp / k2);
  };
  auto tangent_rate = [f, slope, k2, h_affine](double p) {
    const double fpp = f.d2(p);
    const double w2 = -slope * fpp / k2;
    return h_affine ? Vec3(0.0, w2, fpp / k2) : Vec3(w2, 0.0, fpp / k2);
  };
  auto speed = [f, k2](double p) {
    const double fp = f.d1(p);
    return std::sqrt(1.0 + fp * fp / k2);
  };

  const double p_ref = I.midpoint();
  auto sigma = [speed, p_ref](double p) {
    return gl_integrate([&speed](double x) { return speed(x); }, p_ref, p);
  };
  // Monotone with derivative >= 1, so plain Newton from a nearby start
  // converges fast; the clamp keeps iterates on the extended range.
  auto p_of_sigma = [sigma, speed, p_ref, I](double target) {
    double p = p_ref + target / speed(p_ref);
    const double lo = I.lo - 1.0, hi = I.hi + 1.0;
    for (int it = 0; it < 60; ++it) {
      const double err = sigma(p) - target;
      if (std::abs(err) < 1e-13 * (1.0 + std::abs(target))) break;
      p = std::clamp(p - err / speed(p), lo, hi);
    }
    return p;
  };

  Curve directrix;
  directrix.value = [point, p_of_sigma](double w) { return point(p_of_sigma(w)); };
  directrix.d1 = [tangent, speed, p_of_sigma](double w) {
    const double p = p_of_sigma(w);
    return Vec3(tangent(p) / speed(p));
  };
  directrix.d2 = [f, tangent, tangent_rate, speed, k2, p_of_sigma](double w) {
    const double p = p_of_sigma(w);
    const double m = speed(p);
    const double mprime = f.d1(p) * f.d2(p) / (k2 * m);
    return Vec3((tangent_rate(p) * m - tangent(p) * mprime) / (m * m * m));
  };

  const Vec3 dir = (h_affine ? Vec3(0.0, 1.0, slope) : Vec3(1.0, 0.0, slope)) / k;
  Curve director;
  director.value = [dir](double) { return dir; };
  director.d1 = [](double) { return Vec3(Vec3::Zero()); };
  director.d2 = [](double) { return Vec3(Vec3::Zero()); };

  // Ruling parameter needed to land on affine coordinate w: t = (w - w*) * k.
  double wstar_min = wstar(sample_at(I, 0, kProfileSamples));
  double wstar_max = wstar_min;
  for (int j = 1; j < kProfileSamples; ++j) {
    const double w = wstar(sample_at(I, j, kProfileSamples));
    wstar_min = std::min(wstar_min, w);
    wstar_max = std::max(wstar_max, w);
  }
  const Interval sigma_range{sigma(I.lo), sigma(I.hi)};
  const Interval ruling_range{k * (J.lo - wstar_max), k * (J.hi - wstar_min)};

  RuledConversion conv;
  conv.surface = build_ruled(std::move(directrix), std::move(director), sigma_range,
                             ruling_range);
  conv.slope = slope;
  conv.h_affine = h_affine;
  conv.parameter_map = [sigma, wstar, k, h_affine](double u, double v) {
    const double p = h_affine ? u : v;
    const double w = h_affine ? v : u;
    return std::make_pair(sigma(p), k * (w - wstar(p)));
  };
  return conv;
}

}  // namespace

ParametricSurface TranslationSurface::as_parametric() const {
  const ScalarFunction gf = g;
  const ScalarFunction hf = h;
  ParametricSurface s;
  s.X = [gf, hf](double u, double v) { return Vec3(u, v, gf.value(u) + hf.value(v)); };
  s.Xu = [gf](double u, double) { return Vec3(1.0, 0.0, gf.d1(u)); };
  s.Xv = [hf](double, double v) { return Vec3(0.0, 1.0, hf.d1(v)); };
  s.Xuu = [gf](double u, double) { return Vec3(0.0, 0.0, gf.d2(u)); };
  s.Xuv = [](double, double) { return Vec3(Vec3::Zero()); };
  s.Xvv = [hf](double, double v) { return Vec3(0.0, 0.0, hf.d2(v)); };
  s.domain = {u_range, v_range};
  s.analytic = true;
  return s;
}

TranslationSurface build_translation(ScalarFunction g, ScalarFunction h,
                                     Interval u_range, Interval v_range, double d_shift) {
  if (!u_range.valid() || !v_range.valid()) {
    throw InvalidParams("translation surface ranges must satisfy lo < hi");
  }
  validate_profile(g, u_range, "g");
  validate_profile(h, v_range, "h");
  TranslationSurface ts;
  ts.g = std::move(g);
  ts.h = std::move(h);
  ts.u_range = u_range;
  ts.v_range = v_range;
  ts.d_shift = d_shift;
  return ts;
}

double pde_residual(const TranslationSurface& ts, double u, double v) {
  return residual_from(ts.g, ts.h, u, v);
}

double scherk_density_profile(double c, double D, double u) {
  const double k = std::sqrt(1.0 + c * c);
  const double cs = std::cos((u + D) / k);
  if (std::abs(cs) < 1e-12) {
    std::ostringstream msg;
    msg << "profile pole at u = " << u << " (cos((u + D)/sqrt(1 + c^2)) vanishes)";
    throw PoleAt(msg.str());
  }
  return -(1.0 + c * c) * std::log(std::abs(cs));
}

TranslationSurface make_translation_minimal(double c, double D, double d,
                                            Interval u_range, Interval v_range) {
  if (!u_range.valid() || !v_range.valid()) {
    throw InvalidParams("translation surface ranges must satisfy lo < hi");
  }
  const double k2 = 1.0 + c * c;
  const double k = std::sqrt(k2);
  // Poles sit where (u + D)/k hits pi/2 + m*pi; reject a range touching one.
  const double s_lo = (u_range.lo + D) / k;
  const double s_hi = (u_range.hi + D) / k;
  const double m_first = std::ceil((s_lo - M_PI / 2.0) / M_PI);
  if (m_first <= std::floor((s_hi - M_PI / 2.0) / M_PI)) {
    const double pole_u = k * (M_PI / 2.0 + m_first * M_PI) - D;
    std::ostringstream msg;
    msg << "u-range [" << u_range.lo << ", " << u_range.hi << "] touches a profile pole at u = "
        << pole_u;
    throw PoleAt(msg.str());
  }
  ScalarFunction g;
  g.value = [c, D](double u) { return scherk_density_profile(c, D, u); };
  g.d1 = [c, D, k](double u) { return k * std::tan((u + D) / k); };
  g.d2 = [c, D, k](double u) {
    const double t = std::tan((u + D) / k);
    return 1.0 + t * t;
  };
  ScalarFunction h;
  h.value = [c, d](double v) { return c * v + d; };
  h.d1 = [c](double) { return c; };
  h.d2 = [](double) { return 0.0; };
  return build_translation(std::move(g), std::move(h), u_range, v_range, d);
}

RuledConversion to_ruled(const TranslationSurface& ts) {
  constexpr double kAffineTol = 1e-8;
  if (max_abs_d2(ts.h, ts.v_range) < kAffineTol) {
    const double v0 = ts.v_range.midpoint();
    const double slope = ts.h.d1(v0);
    const double offset = ts.h.value(v0) - slope * v0;
    return convert_affine(ts.g, ts.u_range, ts.v_range, slope, offset, true);
  }
  if (max_abs_d2(ts.g, ts.u_range) < kAffineTol) {
    const double u0 = ts.u_range.midpoint();
    const double slope = ts.g.d1(u0);
    const double offset = ts.g.value(u0) - slope * u0;
    return convert_affine(ts.h, ts.v_range, ts.u_range, slope, offset, false);
  }
  throw NotRuledForm("neither summand is affine to 1e-8; the surface is not singly ruled");
}

const char* to_string(Theorem2Verdict v) {
  switch (v) {
    case Theorem2Verdict::minimal_g_affine: return "minimal_g_affine";
    case Theorem2Verdict::minimal_h_affine: return "minimal_h_affine";
    case Theorem2Verdict::not_minimal: return "not_minimal";
  }
  return "unknown";
}

Theorem2Verdict theorem2_check(const ScalarFunction& g, const ScalarFunction& h,
                               const GridSpec& grid) {
  constexpr double kTolMin = 1e-6;
  constexpr double kTolAffine = 1e-6;
  if (grid.nu < 2 || grid.nv < 2) throw InvalidParams("theorem2_check needs nu, nv >= 2");
  double worst = 0.0;
  for (int i = 0; i < grid.nu; ++i) {
    const double u = sample_at(grid.domain.u, i, grid.nu);
    for (int j = 0; j < grid.nv; ++j) {
      const double v = sample_at(grid.domain.v, j, grid.nv);
      worst = std::max(worst, std::abs(residual_from(g, h, u, v)));
    }
  }
  if (worst >= kTolMin) return Theorem2Verdict::not_minimal;
  const bool h_flat = max_abs_d2(h, grid.domain.v) < kTolAffine;
  const bool g_flat = max_abs_d2(g, grid.domain.u) < kTolAffine;
  if (h_flat) return Theorem2Verdict::minimal_h_affine;
  if (g_flat) return Theorem2Verdict::minimal_g_affine;
  throw Error(
      "grid residual vanishes although both summands are curved; the affine-summand "
      "dichotomy has been violated");
}

}  // namespace wmc
