#include <cmath>

#include "doctest.h"
#include "support.hpp"
#include "wmc/wmc.hpp"

using namespace wmc;

namespace {
const DensityField kUnweighted = make_density_custom(
    [](const Vec3&) { return 0.0; }, [](const Vec3&) { return Vec3(Vec3::Zero()); });
}

TEST_CASE("weighted_area on flat and round reference patches") {
  const ParametricSurface plane = make_gallery_surface(GallerySpec::plane({0, 0, 1}, 0.0));
  CHECK(weighted_area(plane, make_density_ez(), 20, 20) == doctest::Approx(4.0).epsilon(1e-13));

  // Sphere chart trims polar caps of height 1 - cos(1e-3).
  const double R = 1.0;
  const ParametricSurface sphere = make_gallery_surface(GallerySpec::sphere(R));
  const double cap = std::cos(sphere.domain.u.lo) - std::cos(sphere.domain.u.hi);
  const double exact = 2.0 * M_PI * R * R * cap;
  CHECK(weighted_area(sphere, kUnweighted, 200, 200) == doctest::Approx(exact).epsilon(1e-4));

  CHECK_THROWS_AS(weighted_area(plane, kUnweighted, 1, 5), InvalidParams);
}

TEST_CASE("first variation of weighted area tracks -2 Hphi") {
  SUBCASE("round sphere under the Gaussian weight") {
    const ParametricSurface s = make_gallery_surface(GallerySpec::sphere(2.0));
    const auto bump = [](double u, double v) { return std::sin(u) * std::cos(v) + 1.5; };
    const VariationCheck vc =
        first_variation_check(s, make_density_gaussian(), bump, 1e-3, 40, 40);
    const double rel = std::abs(vc.numeric_derivative - vc.formula_value) /
                       std::max(1.0, std::abs(vc.formula_value));
    CHECK(rel < 1e-4);
    CHECK(std::abs(vc.formula_value) > 1.0);  // far from minimal, signal is real
  }

  SUBCASE("unit-bump plane pushed along e^z") {
    // Area(t) = 4 e^t exactly, so the centered quotient is 4 sinh(dt)/dt.
    const ParametricSurface s = make_gallery_surface(GallerySpec::plane({0, 0, 1}, 0.0));
    const VariationCheck vc = first_variation_check(
        s, make_density_ez(), [](double, double) { return 1.0; }, 1e-3, 30, 30);
    CHECK(vc.formula_value == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(vc.numeric_derivative ==
          doctest::Approx(4.0 * std::sinh(1e-3) / 1e-3).epsilon(1e-10));
  }

  SUBCASE("minimal family member is a critical point") {
    const ParametricSurface s =
        make_cylindrical_minimal({1.0, 0.6, 0.8, 0.0, Vec3::Zero()}, {-1, 1}).as_parametric();
    const auto bump = [](double u, double v) { return std::cos(u) * v + 0.7; };
    const VariationCheck vc =
        first_variation_check(s, make_density_ez(), bump, 1e-3, 30, 30);
    CHECK(std::abs(vc.formula_value) < 1e-12);
    CHECK(std::abs(vc.numeric_derivative) < 1e-4);
  }

  SUBCASE("parameter guards") {
    const ParametricSurface s = make_gallery_surface(GallerySpec::plane({0, 0, 1}, 0.0));
    const auto one = [](double, double) { return 1.0; };
    CHECK_THROWS_AS(first_variation_check(s, kUnweighted, one, 0.0, 10, 10), InvalidParams);
    CHECK_THROWS_AS(first_variation_check(s, kUnweighted, one, 1e-3, 10, 1), InvalidParams);
  }
}
