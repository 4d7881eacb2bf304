#include <cmath>
#include <string>

#include "doctest.h"
#include "support.hpp"
#include "wmc/wmc.hpp"

using namespace wmc;

namespace {

ScalarFunction quadratic() {
  ScalarFunction f;
  f.value = [](double x) { return x * x; };
  f.d1 = [](double x) { return 2 * x; };
  f.d2 = [](double) { return 2.0; };
  return f;
}

ScalarFunction affine(double slope, double offset) {
  ScalarFunction f;
  f.value = [slope, offset](double x) { return slope * x + offset; };
  f.d1 = [slope](double) { return slope; };
  f.d2 = [](double) { return 0.0; };
  return f;
}

}  // namespace

TEST_CASE("build_translation validates the supplied derivatives") {
  CHECK_NOTHROW(build_translation(quadratic(), affine(0.5, -1), {-1, 1}, {-1, 1}));

  ScalarFunction lying = quadratic();
  lying.d1 = [](double x) { return 2 * x + 0.01; };
  try {
    build_translation(lying, affine(0.5, -1), {-1, 1}, {-1, 1});
    FAIL("expected DerivativeMismatch");
  } catch (const DerivativeMismatch& e) {
    CHECK(std::string(e.what()).find("g'") != std::string::npos);
  }

  ScalarFunction bad_h = quadratic();
  bad_h.d2 = [](double) { return 1.7; };
  try {
    build_translation(quadratic(), bad_h, {-1, 1}, {-1, 1});
    FAIL("expected DerivativeMismatch");
  } catch (const DerivativeMismatch& e) {
    CHECK(std::string(e.what()).find("h''") != std::string::npos);
  }

  CHECK_THROWS_AS(build_translation(quadratic(), quadratic(), {1, -1}, {-1, 1}),
                  InvalidParams);
}

TEST_CASE("as_parametric exposes the graph structure") {
  const TranslationSurface ts =
      build_translation(quadratic(), affine(2.0, 0.5), {-1, 1}, {-2, 2});
  const ParametricSurface s = ts.as_parametric();
  CHECK(s.analytic);
  CHECK((s.X(0.3, -1.2) - Vec3(0.3, -1.2, 0.09 + 2.0 * -1.2 + 0.5)).norm() < 1e-15);
  CHECK((s.Xu(0.3, -1.2) - Vec3(1, 0, 0.6)).norm() < 1e-15);
  CHECK((s.Xv(0.3, -1.2) - Vec3(0, 1, 2.0)).norm() == 0.0);
  CHECK((s.Xuu(0.3, -1.2) - Vec3(0, 0, 2)).norm() == 0.0);
  CHECK(s.Xuv(0.3, -1.2).norm() == 0.0);
}

TEST_CASE("pde_residual agrees with the curvature pipeline") {
  // residual = 2 (1 + g'^2 + h'^2)^{3/2} Hphi under e^z, exactly.
  ScalarFunction g;
  g.value = [](double u) { return std::sin(u) + 0.2 * u * u; };
  g.d1 = [](double u) { return std::cos(u) + 0.4 * u; };
  g.d2 = [](double u) { return -std::sin(u) + 0.4; };
  ScalarFunction h;
  h.value = [](double v) { return std::cosh(v) - 1.5 * v; };
  h.d1 = [](double v) { return std::sinh(v) - 1.5; };
  h.d2 = [](double v) { return std::cosh(v); };
  const TranslationSurface ts = build_translation(g, h, {-1.2, 1.2}, {-1.2, 1.2});
  const ParametricSurface s = ts.as_parametric();
  const DensityField ez = make_density_ez();
  testutil::Rng rng(5150);
  for (int k = 0; k < 50; ++k) {
    const double u = rng.uniform(-1.2, 1.2), v = rng.uniform(-1.2, 1.2);
    const double gp = g.d1(u), hp = h.d1(v);
    const double w = 1.0 + gp * gp + hp * hp;
    const double expected = 2.0 * std::pow(w, 1.5) * weighted_mean_curvature(s, ez, u, v).Hphi;
    CHECK(pde_residual(ts, u, v) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("reference residual values") {
  const TranslationSurface paraboloid =
      build_translation(quadratic(), quadratic(), {-1, 1}, {-1, 1});
  CHECK(pde_residual(paraboloid, 0.0, 0.0) == 3.0);

  // Euclidean Scherk z = log(cos v) - log(cos u): residual = -(1+g'^2+h'^2),
  // the pure density term, since the Euclidean minimal equation cancels.
  ScalarFunction g;
  g.value = [](double u) { return -std::log(std::cos(u)); };
  g.d1 = [](double u) { return std::tan(u); };
  g.d2 = [](double u) { return 1.0 + std::tan(u) * std::tan(u); };
  ScalarFunction h;
  h.value = [](double v) { return std::log(std::cos(v)); };
  h.d1 = [](double v) { return -std::tan(v); };
  h.d2 = [](double v) { return -(1.0 + std::tan(v) * std::tan(v)); };
  const TranslationSurface scherk = build_translation(g, h, {-1, 1}, {-1, 1});
  CHECK(pde_residual(scherk, 0.0, 0.0) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("density-adapted profile") {
  // c = 1, u = sqrt(2) pi / 4: the argument is pi/4, so the value is log 2.
  const double u = std::sqrt(2.0) * M_PI / 4.0;
  CHECK(scherk_density_profile(1.0, 0.0, u) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(scherk_density_profile(0.0, 0.0, 0.0) == 0.0);
  CHECK_THROWS_AS(scherk_density_profile(0.0, 0.0, M_PI / 2), PoleAt);
}

TEST_CASE("constructed translation surfaces are weighted-minimal") {
  const DensityField ez = make_density_ez();
  for (double c : {0.0, 0.5, 1.0, 2.0}) {
    const TranslationSurface ts = make_translation_minimal(c, 0.1, -0.3, {-1, 1}, {-1, 1});
    const MinimalityReport rep = minimality_report(ts.as_parametric(), ez, 21, 21, 1e-8);
    CHECK(rep.pass);
    double worst = 0.0;
    for (int i = 0; i <= 12; ++i) {
      for (int j = 0; j <= 12; ++j) {
        worst = std::max(worst, std::abs(pde_residual(ts, -1 + i / 6.0, -1 + j / 6.0)));
      }
    }
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("pole scanning rejects bad u-ranges") {
  CHECK_THROWS_AS(make_translation_minimal(0.0, 0.0, 0.0, {1.0, 2.0}, {-1, 1}), PoleAt);
  CHECK_THROWS_AS(make_translation_minimal(0.0, 1.0, 0.0, {-1, 1}, {-1, 1}), PoleAt);
  // c = 2 widens the pole-free window to (-sqrt(5) pi/2, sqrt(5) pi/2).
  CHECK_NOTHROW(make_translation_minimal(2.0, 0.0, 0.0, {-3.4, 3.4}, {-1, 1}));
  CHECK_THROWS_AS(make_translation_minimal(2.0, 0.0, 0.0, {-3.6, 3.6}, {-1, 1}), PoleAt);
  try {
    make_translation_minimal(0.0, 0.0, 0.0, {1.0, 2.0}, {-1, 1});
    FAIL("expected PoleAt");
  } catch (const PoleAt& e) {
    CHECK(std::string(e.what()).find("pole") != std::string::npos);
  }
}

TEST_CASE("to_ruled rewrites affine-summand graphs") {
  SUBCASE("h affine") {
    const TranslationSurface ts = make_translation_minimal(0.5, 0.1, -0.2, {-1, 1}, {-1, 1});
    const RuledConversion conv = to_ruled(ts);
    CHECK(conv.h_affine);
    CHECK(conv.slope == doctest::Approx(0.5).epsilon(1e-12));
    const ParametricSurface graph = ts.as_parametric();
    const ParametricSurface ruled = conv.surface.as_parametric();
    double worst = 0.0;
    for (int i = 0; i <= 8; ++i) {
      for (int j = 0; j <= 8; ++j) {
        const double u = -1 + i / 4.0, v = -1 + j / 4.0;
        const auto [su, sv] = conv.parameter_map(u, v);
        worst = std::max(worst, (graph.X(u, v) - ruled.X(su, sv)).norm());
      }
    }
    CHECK(worst < 1e-9);
    // The rewrite must also be weighted-minimal: same surface, new chart.
    const MinimalityReport rep =
        minimality_report(ruled, make_density_ez(), 15, 15, 1e-8);
    CHECK(rep.pass);
  }

  SUBCASE("g affine") {
    ScalarFunction h;
    h.value = [](double v) { return std::cosh(v); };
    h.d1 = [](double v) { return std::sinh(v); };
    h.d2 = [](double v) { return std::cosh(v); };
    const TranslationSurface ts = build_translation(affine(2.0, 1.0), h, {-1, 1}, {-1, 1});
    const RuledConversion conv = to_ruled(ts);
    CHECK_FALSE(conv.h_affine);
    CHECK(conv.slope == doctest::Approx(2.0).epsilon(1e-12));
    const ParametricSurface graph = ts.as_parametric();
    const ParametricSurface ruled = conv.surface.as_parametric();
    double worst = 0.0;
    for (int i = 0; i <= 8; ++i) {
      for (int j = 0; j <= 8; ++j) {
        const double u = -1 + i / 4.0, v = -1 + j / 4.0;
        const auto [su, sv] = conv.parameter_map(u, v);
        worst = std::max(worst, (graph.X(u, v) - ruled.X(su, sv)).norm());
      }
    }
    CHECK(worst < 1e-9);
  }

  CHECK_THROWS_AS(to_ruled(build_translation(quadratic(), quadratic(), {-1, 1}, {-1, 1})),
                  NotRuledForm);
}

TEST_CASE("affine-summand dichotomy on grids") {
  const GridSpec grid{{{-1, 1}, {-1, 1}}, 21, 21};

  const TranslationSurface hs = make_translation_minimal(1.0, 0.0, 0.0, {-1, 1}, {-1, 1});
  CHECK(theorem2_check(hs.g, hs.h, grid) == Theorem2Verdict::minimal_h_affine);

  // The reflected surface z = g(v) + h(u) is minimal with g affine; the
  // residual expression is symmetric under swapping the roles.
  CHECK(theorem2_check(hs.h, hs.g, grid) == Theorem2Verdict::minimal_g_affine);

  CHECK(theorem2_check(quadratic(), quadratic(), grid) == Theorem2Verdict::not_minimal);

  CHECK(std::string(to_string(Theorem2Verdict::minimal_g_affine)) == "minimal_g_affine");
  CHECK(std::string(to_string(Theorem2Verdict::minimal_h_affine)) == "minimal_h_affine");
  CHECK(std::string(to_string(Theorem2Verdict::not_minimal)) == "not_minimal");

  CHECK_THROWS_AS(theorem2_check(quadratic(), quadratic(), GridSpec{{{-1, 1}, {-1, 1}}, 1, 5}),
                  InvalidParams);
}
