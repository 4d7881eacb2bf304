#pragma once

#include "wmc/density.hpp"
#include "wmc/surface.hpp"
#include "wmc/types.hpp"

namespace wmc {

struct GallerySpec {
  enum class Kind { sphere, cylinder_z, plane, helicoid };

  Kind kind = Kind::plane;
  double radius = 1.0;          // sphere, cylinder_z
  Vec3 normal = Vec3(0, 0, 1);  // plane: X = offset*normal + u t1 + v t2
  double offset = 0.0;
  double pitch = 1.0;           // helicoid: X = (u cos v, u sin v, pitch v)

  static GallerySpec sphere(double R);
  static GallerySpec cylinder_z(double R);
  static GallerySpec plane(const Vec3& normal, double offset);
  static GallerySpec helicoid(double pitch);
};

// Standard charts with analytic derivatives. The sphere chart keeps a 1e-3
// margin away from the poles; the plane chart's normal equals spec.normal.
ParametricSurface make_gallery_surface(const GallerySpec& spec);

enum class RadialFamily { sphere, cylinder_z };

// Bisects R -> Hphi at a fixed chart point down to 1e-10, after asserting
// that Hphi is constant over the mid-bracket surface (throws
// SymmetryViolation when the density breaks the family's symmetry).
double find_minimal_radius(RadialFamily family, const DensityField& density,
                           Interval bracket);

}  // namespace wmc
