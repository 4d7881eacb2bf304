#include <cmath>

#include "doctest.h"
#include "support.hpp"
#include "wmc/wmc.hpp"

using namespace wmc;

TEST_CASE("gallery chart geometry") {
  SUBCASE("sphere") {
    const ParametricSurface s = make_gallery_surface(GallerySpec::sphere(1.5));
    testutil::Rng rng(11);
    for (int k = 0; k < 10; ++k) {
      const double u = rng.uniform(s.domain.u.lo, s.domain.u.hi);
      const double v = rng.uniform(s.domain.v.lo, s.domain.v.hi);
      CHECK(s.X(u, v).norm() == doctest::Approx(1.5).epsilon(1e-14));
      // Outward orientation.
      CHECK(fundamental_forms(s, u, v).N.dot(s.X(u, v)) > 0.0);
    }
    CHECK(derivative_mismatch(s, 7, 7) < 1e-6);
    CHECK_THROWS_AS(make_gallery_surface(GallerySpec::sphere(0.0)), InvalidParams);
  }

  SUBCASE("cylinder") {
    const ParametricSurface s = make_gallery_surface(GallerySpec::cylinder_z(0.75));
    CHECK(s.X(1.0, 0.5).head<2>().norm() == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(s.X(1.0, 0.5).z() == 0.5);
    CHECK(derivative_mismatch(s, 7, 7) < 1e-6);
    CHECK_THROWS_AS(make_gallery_surface(GallerySpec::cylinder_z(-1.0)), InvalidParams);
  }

  SUBCASE("plane normal comes out as requested") {
    const Vec3 n = Vec3(1, 2, -2).normalized();
    const ParametricSurface s = make_gallery_surface(GallerySpec::plane(Vec3(1, 2, -2), 0.4));
    const FundamentalForms f = fundamental_forms(s, 0.1, -0.6);
    CHECK((f.N - n).norm() < 1e-14);
    CHECK(s.X(0, 0).dot(n) == doctest::Approx(0.4).epsilon(1e-14));
    CHECK_THROWS_AS(make_gallery_surface(GallerySpec::plane(Vec3::Zero(), 0.0)),
                    InvalidParams);
  }

  SUBCASE("helicoid") {
    const ParametricSurface s = make_gallery_surface(GallerySpec::helicoid(0.8));
    testutil::Rng rng(12);
    const DensityField none = make_density_custom(
        [](const Vec3&) { return 0.0; }, [](const Vec3&) { return Vec3(Vec3::Zero()); });
    for (int k = 0; k < 10; ++k) {
      const double u = rng.uniform(-2, 2), v = rng.uniform(0, 2 * M_PI);
      CHECK(weighted_mean_curvature(s, none, u, v).H == doctest::Approx(0.0).epsilon(1e-13));
    }
    CHECK_THROWS_AS(make_gallery_surface(GallerySpec::helicoid(0.0)), InvalidParams);
  }
}

TEST_CASE("cylinder weighted curvature magnitude under the Gaussian weight") {
  const DensityField gauss = make_density_gaussian();
  testutil::Rng rng(13);
  for (int k = 0; k < 12; ++k) {
    const double R = rng.uniform(0.2, 3.0);
    const ParametricSurface s = make_gallery_surface(GallerySpec::cylinder_z(R));
    const double u = rng.uniform(0, 2 * M_PI), v = rng.uniform(-1, 1);
    const double want = std::abs(0.5 / R - 0.5 * R);
    CHECK(std::abs(weighted_mean_curvature(s, gauss, u, v).Hphi) ==
          doctest::Approx(want).epsilon(1e-10));
  }
}

TEST_CASE("radial bisection finds the self-similar members") {
  const DensityField gauss = make_density_gaussian();
  CHECK(find_minimal_radius(RadialFamily::cylinder_z, gauss, {0.5, 2.0}) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(find_minimal_radius(RadialFamily::sphere, gauss, {0.5, 3.0}) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("radial bisection guards") {
  const DensityField gauss = make_density_gaussian();
  CHECK_THROWS_AS(find_minimal_radius(RadialFamily::sphere, gauss, {0.0, 2.0}), InvalidParams);
  CHECK_THROWS_AS(find_minimal_radius(RadialFamily::sphere, gauss, {2.0, 1.0}), InvalidParams);

  // e^z breaks the sphere's rotational symmetry: Hphi varies over the surface.
  CHECK_THROWS_AS(find_minimal_radius(RadialFamily::sphere, make_density_ez(), {0.5, 3.0}),
                  SymmetryViolation);
  // The z-cylinder is compatible with e^z, but Hphi = -1/(2R) never crosses zero.
  CHECK_THROWS_AS(find_minimal_radius(RadialFamily::cylinder_z, make_density_ez(), {0.5, 2.0}),
                  NoSignChange);
}

TEST_CASE("plane through the origin is Gaussian-minimal") {
  const DensityField gauss = make_density_gaussian();
  const ParametricSurface s = make_gallery_surface(GallerySpec::plane(Vec3(0.3, -1, 2), 0.0));
  const MinimalityReport rep = minimality_report(s, gauss, 15, 15, 1e-10);
  CHECK(rep.pass);
  CHECK(rep.max_abs_Hphi < 1e-12);
}
