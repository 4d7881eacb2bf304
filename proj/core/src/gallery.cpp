#include "wmc/gallery.hpp"

#include <cmath>
#include <sstream>

#include "wmc/bisect.hpp"
#include "wmc/curvature.hpp"
#include "wmc/errors.hpp"

namespace wmc {

GallerySpec GallerySpec::sphere(double R) {
  GallerySpec s;
  s.kind = Kind::sphere;
  s.radius = R;
  return s;
}

GallerySpec GallerySpec::cylinder_z(double R) {
  GallerySpec s;
  s.kind = Kind::cylinder_z;
  s.radius = R;
  return s;
}

GallerySpec GallerySpec::plane(const Vec3& normal, double offset) {
  GallerySpec s;
  s.kind = Kind::plane;
  s.normal = normal;
  s.offset = offset;
  return s;
}

GallerySpec GallerySpec::helicoid(double pitch) {
  GallerySpec s;
  s.kind = Kind::helicoid;
  s.pitch = pitch;
  return s;
}

namespace {

ParametricSurface sphere_chart(double R) {
  if (!(R > 0.0)) throw InvalidParams("sphere radius must be positive");
  ParametricSurface s;
  s.X = [R](double u, double v) {
    return Vec3(R * std::sin(u) * std::cos(v), R * std::sin(u) * std::sin(v),
                R * std::cos(u));
  };
  s.Xu = [R](double u, double v) {
    return Vec3(R * std::cos(u) * std::cos(v), R * std::cos(u) * std::sin(v),
                -R * std::sin(u));
  };
  s.Xv = [R](double u, double v) {
    return Vec3(-R * std::sin(u) * std::sin(v), R * std::sin(u) * std::cos(v), 0.0);
  };
  s.Xuu = [R](double u, double v) {
    return Vec3(-R * std::sin(u) * std::cos(v), -R * std::sin(u) * std::sin(v),
                -R * std::cos(u));
  };
  s.Xuv = [R](double u, double v) {
    return Vec3(-R * std::cos(u) * std::sin(v), R * std::cos(u) * std::cos(v), 0.0);
  };
  s.Xvv = [R](double u, double v) {
    return Vec3(-R * std::sin(u) * std::cos(v), -R * std::sin(u) * std::sin(v), 0.0);
  };
  s.domain = {{1e-3, M_PI - 1e-3}, {0.0, 2.0 * M_PI}};
  s.analytic = true;
  return s;
}

ParametricSurface cylinder_chart(double R) {
  if (!(R > 0.0)) throw InvalidParams("cylinder radius must be positive");
  ParametricSurface s;
  s.X = [R](double u, double v) { return Vec3(R * std::cos(u), R * std::sin(u), v); };
  s.Xu = [R](double u, double) { return Vec3(-R * std::sin(u), R * std::cos(u), 0.0); };
  s.Xv = [](double, double) { return Vec3(0.0, 0.0, 1.0); };
  s.Xuu = [R](double u, double) { return Vec3(-R * std::cos(u), -R * std::sin(u), 0.0); };
  s.Xuv = [](double, double) { return Vec3(Vec3::Zero()); };
  s.Xvv = [](double, double) { return Vec3(Vec3::Zero()); };
  s.domain = {{0.0, 2.0 * M_PI}, {-1.0, 1.0}};
  s.analytic = true;
  return s;
}

ParametricSurface plane_chart(const Vec3& normal, double offset) {
  const double n_len = normal.norm();
  if (n_len == 0.0) throw InvalidParams("plane normal must be nonzero");
  const Vec3 n = normal / n_len;
  // Tangent frame chosen so Xu x Xv points along n.
  const Vec3 seed = std::abs(n.x()) < 0.9 ? Vec3(Vec3::UnitX()) : Vec3(Vec3::UnitY());
  const Vec3 t1 = n.cross(seed).normalized();
  const Vec3 t2 = n.cross(t1);
  const Vec3 base = offset * n;
  ParametricSurface s;
  s.X = [base, t1, t2](double u, double v) { return Vec3(base + u * t1 + v * t2); };
  s.Xu = [t1](double, double) { return t1; };
  s.Xv = [t2](double, double) { return t2; };
  s.Xuu = [](double, double) { return Vec3(Vec3::Zero()); };
  s.Xuv = [](double, double) { return Vec3(Vec3::Zero()); };
  s.Xvv = [](double, double) { return Vec3(Vec3::Zero()); };
  s.domain = {{-1.0, 1.0}, {-1.0, 1.0}};
  s.analytic = true;
  return s;
}

ParametricSurface helicoid_chart(double pitch) {
  if (pitch == 0.0) throw InvalidParams("helicoid pitch must be nonzero");
  ParametricSurface s;
  s.X = [pitch](double u, double v) {
    return Vec3(u * std::cos(v), u * std::sin(v), pitch * v);
  };
  s.Xu = [](double, double v) { return Vec3(std::cos(v), std::sin(v), 0.0); };
  s.Xv = [pitch](double u, double v) {
    return Vec3(-u * std::sin(v), u * std::cos(v), pitch);
  };
  s.Xuu = [](double, double) { return Vec3(Vec3::Zero()); };
  s.Xuv = [](double, double v) { return Vec3(-std::sin(v), std::cos(v), 0.0); };
  s.Xvv = [](double u, double v) {
    return Vec3(-u * std::cos(v), -u * std::sin(v), 0.0);
  };
  s.domain = {{-2.0, 2.0}, {0.0, 2.0 * M_PI}};
  s.analytic = true;
  return s;
}

ParametricSurface radial_surface(RadialFamily family, double R) {
  return family == RadialFamily::sphere ? sphere_chart(R) : cylinder_chart(R);
}

}  // namespace

ParametricSurface make_gallery_surface(const GallerySpec& spec) {
  switch (spec.kind) {
    case GallerySpec::Kind::sphere: return sphere_chart(spec.radius);
    case GallerySpec::Kind::cylinder_z: return cylinder_chart(spec.radius);
    case GallerySpec::Kind::plane: return plane_chart(spec.normal, spec.offset);
    case GallerySpec::Kind::helicoid: return helicoid_chart(spec.pitch);
  }
  throw InvalidParams("unknown gallery kind");
}

double find_minimal_radius(RadialFamily family, const DensityField& density,
                           Interval bracket) {
  if (!(bracket.lo > 0.0) || !(bracket.hi > bracket.lo)) {
    throw InvalidParams("radius bracket must satisfy 0 < lo < hi");
  }

  // The bisection tracks Hphi at one chart point, which only finds the
  // family's minimal member if Hphi is constant over each surface. Probe
  // that on the mid-bracket surface before trusting the single point.
  {
    const ParametricSurface probe = radial_surface(family, bracket.midpoint());
    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (int i = 0; i < 7; ++i) {
      const double u = probe.domain.u.lo + i * probe.domain.u.length() / 6;
      for (int j = 0; j < 7; ++j) {
        const double v = probe.domain.v.lo + j * probe.domain.v.length() / 6;
        const double hphi = weighted_mean_curvature(probe, density, u, v).Hphi;
        lo = first ? hphi : std::min(lo, hphi);
        hi = first ? hphi : std::max(hi, hphi);
        first = false;
      }
    }
    if (hi - lo > 1e-9) {
      std::ostringstream msg;
      msg << "Hphi varies by " << hi - lo
          << " across one surface of the family; the density does not share the "
             "family's symmetry, so no single minimal radius exists";
      throw SymmetryViolation(msg.str());
    }
  }

  auto hphi_at = [family, &density](double R) {
    const ParametricSurface s = radial_surface(family, R);
    return weighted_mean_curvature(s, density, s.domain.u.midpoint(),
                                   s.domain.v.midpoint())
        .Hphi;
  };
  return bisect(hphi_at, bracket.lo, bracket.hi, 1e-10);
}

}  // namespace wmc
