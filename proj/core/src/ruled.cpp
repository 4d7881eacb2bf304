#include "wmc/ruled.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "wmc/directrix_ode.hpp"
#include "wmc/errors.hpp"

namespace wmc {

ParametricSurface RuledSurface::as_parametric() const {
  const Curve a = alpha;
  const Curve b = beta;
  ParametricSurface s;
  s.X = [a, b](double u, double v) { return Vec3(a.value(u) + v * b.value(u)); };
  s.Xu = [a, b](double u, double v) { return Vec3(a.d1(u) + v * b.d1(u)); };
  s.Xv = [b](double u, double) { return b.value(u); };
  s.Xuu = [a, b](double u, double v) { return Vec3(a.d2(u) + v * b.d2(u)); };
  s.Xuv = [b](double u, double) { return b.d1(u); };
  s.Xvv = [](double, double) { return Vec3(Vec3::Zero()); };
  s.domain = {u_range, v_range};
  s.analytic = true;
  return s;
}

RuledSurface build_ruled(Curve alpha, Curve beta, Interval u_range, Interval v_range) {
  if (!u_range.valid() || !v_range.valid()) {
    throw InvalidParams("ruled surface ranges must satisfy lo < hi");
  }
  constexpr int kSamples = 32;
  constexpr double kTol = 1e-8;
  struct Worst {
    double dev = 0, at = 0;
  } speed, unit, ortho;
  const double step = u_range.length() / (kSamples - 1);
  for (int k = 0; k < kSamples; ++k) {
    const double u = u_range.lo + k * step;
    const Vec3 a1 = alpha.d1(u);
    const Vec3 b0 = beta.value(u);
    auto track = [u](Worst& w, double dev) {
      if (dev > w.dev) w = {dev, u};
    };
    track(speed, std::abs(a1.norm() - 1.0));
    track(unit, std::abs(b0.norm() - 1.0));
    track(ortho, std::abs(a1.dot(b0)));
  }
  auto fail = [](const char* what, const Worst& w) {
    std::ostringstream msg;
    msg << what << " violated by " << w.dev << " at u = " << w.at;
    throw NormalizationViolation(msg.str());
  };
  if (speed.dev > kTol) fail("unit directrix speed |alpha'| = 1", speed);
  if (unit.dev > kTol) fail("unit director |beta| = 1", unit);
  if (ortho.dev > kTol) fail("orthogonality <alpha', beta> = 0", ortho);
  RuledSurface rs;
  rs.alpha = std::move(alpha);
  rs.beta = std::move(beta);
  rs.u_range = u_range;
  rs.v_range = v_range;
  return rs;
}

RuledResiduals coefficient_residuals(const RuledSurface& rs, const DensityField& density,
                                     double u) {
  if (density.kind != DensityField::Kind::linear) {
    throw NonConstantGradient(
        "coefficient residuals are defined for densities with constant gradient");
  }
  const Vec3 grad = density.a;
  const Vec3 a1 = rs.alpha.d1(u);
  const Vec3 a2 = rs.alpha.d2(u);
  const Vec3 b0 = rs.beta.value(u);
  const Vec3 b1 = rs.beta.d1(u);
  const Vec3 b2 = rs.beta.d2(u);
  const Vec3 ab = a1.cross(b0);  // alpha' x beta
  const Vec3 bb = b1.cross(b0);  // beta' x beta
  const double ab_grad = ab.dot(grad);
  const double bb_grad = bb.dot(grad);
  const double tangents = a1.dot(b1);
  RuledResiduals r;
  r.r1 = ab.dot(a2) - ab_grad;
  r.r2 = ab.dot(b2) + bb.dot(a2) - bb_grad - 2.0 * tangents * ab_grad;
  r.r3 = bb.dot(b2) - 2.0 * tangents * bb_grad - b1.squaredNorm() * ab_grad;
  r.r4 = b1.squaredNorm() * bb_grad;
  return r;
}

RuledSurface make_cylindrical_minimal(const CylindricalFamilyParams& p, Interval v_range,
                                      Interval u_range) {
  if (!(p.A > 0)) throw InvalidParams("family constant A must be positive");
  if (p.b == 0.0) {
    throw InvalidParams(
        "b = 0 puts the director on the vertical axis; use make_vertical_plane instead");
  }
  if (std::abs(p.b * p.b + p.c * p.c - 1.0) >= 1e-12) {
    throw InvalidParams("(b, c) must satisfy b^2 + c^2 = 1");
  }
  const double A = p.A, b = p.b, c = p.c;
  Curve alpha;
  alpha.value = [A, b, c](double u) { return closed_form_directrix(A, b, c, u).position; };
  alpha.d1 = [A, b, c](double u) { return closed_form_directrix(A, b, c, u).velocity; };
  alpha.d2 = [A, b, c](double u) {
    const double E2 = A * std::exp(2.0 * b * u);
    const double w = (E2 - 1.0) / (E2 + 1.0);
    const double xp = 2.0 * std::sqrt(A) * std::exp(b * u) / (1.0 + E2);
    const double wp = 4.0 * A * b * std::exp(2.0 * b * u) / ((E2 + 1.0) * (E2 + 1.0));
    return Vec3(-b * xp * w, -c * wp, b * wp);
  };
  Curve beta;
  const Vec3 director(0.0, b, c);
  beta.value = [director](double) { return director; };
  beta.d1 = [](double) { return Vec3(Vec3::Zero()); };
  beta.d2 = [](double) { return Vec3(Vec3::Zero()); };
  if (p.rot_z != 0.0 || !p.shift.isZero(0.0)) {
    const Mat3 R = rotation_about_z(p.rot_z);
    alpha = transformed_curve(alpha, R, p.shift);
    beta = rotated_curve(beta, R);
  }
  return build_ruled(std::move(alpha), std::move(beta), u_range, v_range);
}

RuledSurface make_vertical_plane(const Eigen::Vector2d& direction_in_xy, const Vec3& through,
                                 Interval u_range, Interval v_range) {
  const double len = direction_in_xy.norm();
  if (len == 0.0) throw InvalidParams("vertical plane direction must be nonzero");
  const Vec3 d(direction_in_xy.x() / len, direction_in_xy.y() / len, 0.0);
  Curve alpha;
  alpha.value = [through, d](double u) { return Vec3(through + u * d); };
  alpha.d1 = [d](double) { return d; };
  alpha.d2 = [](double) { return Vec3(Vec3::Zero()); };
  Curve beta;
  beta.value = [](double) { return Vec3(Vec3::UnitZ()); };
  beta.d1 = [](double) { return Vec3(Vec3::Zero()); };
  beta.d2 = [](double) { return Vec3(Vec3::Zero()); };
  return build_ruled(std::move(alpha), std::move(beta), u_range, v_range);
}

RuledSurface make_rotating_director_ruled(double omega, double eps, double theta0,
                                          Interval u_range, Interval v_range) {
  if (omega == 0.0) throw InvalidParams("omega must be nonzero");
  if (std::abs(std::abs(omega) - std::abs(eps)) < 1e-9) {
    throw InvalidParams("|omega| = |eps| resonance has no product-to-sum antiderivative");
  }
  const double w = omega, e = eps, t0 = theta0;
  const double wm = w - e, wp = w + e;
  Curve alpha;
  // alpha' = -sin(theta) e1 + cos(theta) (cos(eps u) e2 + sin(eps u) e3),
  // integrated in closed form; wm, wp != 0 by the guards above.
  alpha.value = [w, t0, wm, wp](double u) {
    const double x = std::cos(w * u + t0) / w;
    const double y = 0.5 * (std::sin(wm * u + t0) / wm + std::sin(wp * u + t0) / wp);
    const double z = 0.5 * (std::cos(wm * u + t0) / wm - std::cos(wp * u + t0) / wp);
    return Vec3(x, y, z);
  };
  alpha.d1 = [w, e, t0](double u) {
    const double th = w * u + t0;
    return Vec3(-std::sin(th), std::cos(th) * std::cos(e * u), std::cos(th) * std::sin(e * u));
  };
  alpha.d2 = [w, e, t0](double u) {
    const double th = w * u + t0;
    const double ce = std::cos(e * u), se = std::sin(e * u);
    return Vec3(-w * std::cos(th),
                -w * std::sin(th) * ce - e * std::cos(th) * se,
                -w * std::sin(th) * se + e * std::cos(th) * ce);
  };
  Curve beta;
  beta.value = [w, e, t0](double u) {
    const double th = w * u + t0;
    return Vec3(std::cos(th), std::sin(th) * std::cos(e * u), std::sin(th) * std::sin(e * u));
  };
  beta.d1 = [w, e, t0](double u) {
    const double th = w * u + t0;
    const double ce = std::cos(e * u), se = std::sin(e * u);
    return Vec3(-w * std::sin(th),
                w * std::cos(th) * ce - e * std::sin(th) * se,
                w * std::cos(th) * se + e * std::sin(th) * ce);
  };
  beta.d2 = [w, e, t0](double u) {
    const double th = w * u + t0;
    const double ce = std::cos(e * u), se = std::sin(e * u);
    return Vec3(-w * w * std::cos(th),
                -(w * w + e * e) * std::sin(th) * ce - 2.0 * w * e * std::cos(th) * se,
                -(w * w + e * e) * std::sin(th) * se + 2.0 * w * e * std::cos(th) * ce);
  };
  return build_ruled(std::move(alpha), std::move(beta), u_range, v_range);
}

std::vector<CounterexampleEntry> noncylindrical_counterexample_suite(
    const DensityField& density) {
  struct Item {
    const char* name;
    bool vertical_plane;
    RuledSurface rs;
  };
  const Interval u_range{-1.5, 1.5};
  const Interval v_range{-0.5, 0.5};

  // Axis directrix with a horizontally turning director: a helicoid whose
  // rulings spin around the vertical line.
  Curve axis;
  axis.value = [](double u) { return Vec3(0, 0, u); };
  axis.d1 = [](double) { return Vec3(Vec3::UnitZ()); };
  axis.d2 = [](double) { return Vec3(Vec3::Zero()); };
  Curve spin;
  spin.value = [](double u) { return Vec3(std::cos(u), std::sin(u), 0); };
  spin.d1 = [](double u) { return Vec3(-std::sin(u), std::cos(u), 0); };
  spin.d2 = [](double u) { return Vec3(-std::cos(u), -std::sin(u), 0); };

  // Unit circle inside a tilted plane whose span misses the vertical
  // direction, used as both directrix and director: X = (1 + v) * circle(u),
  // a flat sector of that tilted plane. The v-range stays clear of v = -1.
  const Vec3 e1 = Vec3::UnitX();
  const Vec3 e2 = Vec3(0, 1, 1).normalized();
  Curve circle;
  circle.value = [e1, e2](double u) { return Vec3(std::cos(u) * e1 + std::sin(u) * e2); };
  circle.d1 = [e1, e2](double u) { return Vec3(-std::sin(u) * e1 + std::cos(u) * e2); };
  circle.d2 = [e1, e2](double u) { return Vec3(-std::cos(u) * e1 - std::sin(u) * e2); };

  // Same construction with the unit circle of the plane y = 0: the director
  // turns, but the swept surface is a vertical plane.
  Curve arc;
  arc.value = [](double u) { return Vec3(std::cos(u), 0, std::sin(u)); };
  arc.d1 = [](double u) { return Vec3(-std::sin(u), 0, std::cos(u)); };
  arc.d2 = [](double u) { return Vec3(-std::cos(u), 0, -std::sin(u)); };

  std::vector<Item> items;
  items.push_back({"axial helicoid", false, build_ruled(axis, spin, u_range, v_range)});
  items.push_back({"director turning in a tilted plane", false,
                   build_ruled(circle, circle, u_range, v_range)});
  items.push_back({"non-planar spherical director", false,
                   make_rotating_director_ruled(1.0, 0.5, 0.0, u_range, v_range)});
  items.push_back({"vertical plane", true,
                   make_vertical_plane(Eigen::Vector2d(1, 0), Vec3::Zero(), u_range, v_range)});
  items.push_back({"director arcing inside a vertical plane", true,
                   build_ruled(arc, arc, u_range, v_range)});

  std::vector<CounterexampleEntry> report;
  report.reserve(items.size());
  constexpr int kSamples = 33;
  for (const Item& item : items) {
    double worst = 0.0;
    for (int k = 0; k < kSamples; ++k) {
      const double u = u_range.lo + k * u_range.length() / (kSamples - 1);
      const RuledResiduals r = coefficient_residuals(item.rs, density, u);
      worst = std::max(worst,
                       std::abs(r.r1) + std::abs(r.r2) + std::abs(r.r3) + std::abs(r.r4));
    }
    if (!item.vertical_plane && worst <= 0.5) {
      std::ostringstream msg;
      msg << "counterexample entry '" << item.name
          << "' unexpectedly satisfies the minimality system (max residual " << worst << ")";
      throw Error(msg.str());
    }
    report.push_back({item.name, item.vertical_plane, worst});
  }
  return report;
}

}  // namespace wmc
