#include <benchmark/benchmark.h>

#include "wmc/wmc.hpp"

using namespace wmc;

namespace {

const DensityField& ez() {
  static const DensityField d = make_density_ez();
  return d;
}

ParametricSurface family_surface() {
  return make_cylindrical_minimal({1.0, 0.6, 0.8, 0.0, Vec3::Zero()}, {-2, 2})
      .as_parametric();
}

void BM_fundamental_forms(benchmark::State& state) {
  const ParametricSurface s = family_surface();
  double u = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fundamental_forms(s, u, -0.3));
    u += 1e-6;  // defeat value memoization without changing the workload
  }
}

void BM_weighted_mean_curvature(benchmark::State& state) {
  const ParametricSurface s = family_surface();
  double u = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(weighted_mean_curvature(s, ez(), u, -0.3));
    u += 1e-6;
  }
}

void BM_minimality_report_analytic(benchmark::State& state) {
  const ParametricSurface s = family_surface();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimality_report(s, ez(), n, n, 1e-8));
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}

void BM_minimality_report_fd(benchmark::State& state) {
  const ParametricSurface s = with_fd_derivatives(family_surface());
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimality_report(s, ez(), n, n, 1e-5));
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}

void BM_integrate_directrix(benchmark::State& state) {
  const DirectrixState init = closed_form_directrix(1.0, 0.6, 0.8, 0.0);
  const double step = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        integrate_directrix(0.6, 0.8, init.position, init.velocity, 1.0, step));
  }
}

void BM_tessellate(benchmark::State& state) {
  const ParametricSurface s = family_surface();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tessellate(s, n, n, "parametric-grid"));
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}

void BM_weighted_area(benchmark::State& state) {
  const ParametricSurface s = make_gallery_surface(GallerySpec::sphere(2.0));
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(weighted_area(s, make_density_gaussian(), n, n));
  }
}

}  // namespace

BENCHMARK(BM_fundamental_forms);
BENCHMARK(BM_weighted_mean_curvature);
BENCHMARK(BM_minimality_report_analytic)->Arg(25)->Arg(50);
BENCHMARK(BM_minimality_report_fd)->Arg(25)->Arg(50);
BENCHMARK(BM_integrate_directrix)->Arg(100)->Arg(1000);
BENCHMARK(BM_tessellate)->Arg(50)->Arg(100);
BENCHMARK(BM_weighted_area)->Arg(50)->Arg(100);

BENCHMARK_MAIN();
