#pragma once

// Shared fixtures: reference surfaces with known behavior, deterministic
// random generators, and a subprocess harness for the CLI binary.

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wmc/wmc.hpp"

namespace testutil {

// Helicoid around the z-axis in ruled form. Satisfies all three ruled
// normalizations exactly; not weighted-minimal under e^z.
inline wmc::RuledSurface helicoid_ruled(wmc::Interval u_range = {-1.5, 1.5},
                                        wmc::Interval v_range = {-1.0, 1.0}) {
  wmc::Curve axis;
  axis.value = [](double u) { return wmc::Vec3(0.0, 0.0, u); };
  axis.d1 = [](double) { return wmc::Vec3(0.0, 0.0, 1.0); };
  axis.d2 = [](double) { return wmc::Vec3(wmc::Vec3::Zero()); };
  wmc::Curve spin;
  spin.value = [](double u) { return wmc::Vec3(std::cos(u), std::sin(u), 0.0); };
  spin.d1 = [](double u) { return wmc::Vec3(-std::sin(u), std::cos(u), 0.0); };
  spin.d2 = [](double u) { return wmc::Vec3(-std::cos(u), -std::sin(u), 0.0); };
  return wmc::build_ruled(std::move(axis), std::move(spin), u_range, v_range);
}

// Cylindrical-director ruled surface from a tangent-angle profile: the
// directrix integrates alpha' = cos(theta) e1 + sin(theta) (0,-c,b), which is
// unit-speed and orthogonal to beta = (0,b,c) for ANY theta. Minimality then
// reduces to the single equation theta' = b cos(theta).
inline wmc::RuledSurface ruled_from_tangent_angle(const wmc::ScalarFunction& theta,
                                                  double b, double c,
                                                  double anchor_u,
                                                  const wmc::Vec3& anchor_point,
                                                  wmc::Interval u_range,
                                                  wmc::Interval v_range) {
  const wmc::Vec3 e1(1.0, 0.0, 0.0);
  const wmc::Vec3 m(0.0, -c, b);
  wmc::Curve alpha;
  alpha.d1 = [theta, e1, m](double u) {
    return wmc::Vec3(std::cos(theta.value(u)) * e1 + std::sin(theta.value(u)) * m);
  };
  alpha.d2 = [theta, e1, m](double u) {
    const double th = theta.value(u);
    return wmc::Vec3(theta.d1(u) * (-std::sin(th) * e1 + std::cos(th) * m));
  };
  alpha = wmc::integral_curve(alpha.d1, alpha.d2, anchor_u, anchor_point);
  wmc::Curve beta;
  const wmc::Vec3 dir(0.0, b, c);
  beta.value = [dir](double) { return dir; };
  beta.d1 = [](double) { return wmc::Vec3(wmc::Vec3::Zero()); };
  beta.d2 = [](double) { return wmc::Vec3(wmc::Vec3::Zero()); };
  return wmc::build_ruled(std::move(alpha), std::move(beta), u_range, v_range);
}

// Tangent angle of the closed-form minimal directrix:
// theta*(u) = atan(sinh(b u + log(A)/2)), which solves theta' = b cos(theta).
inline wmc::ScalarFunction family_tangent_angle(double A, double b) {
  const double s0 = 0.5 * std::log(A);
  wmc::ScalarFunction theta;
  theta.value = [b, s0](double u) { return std::atan(std::sinh(b * u + s0)); };
  theta.d1 = [b, s0](double u) { return b / std::cosh(b * u + s0); };
  theta.d2 = [b, s0](double u) {
    const double s = b * u + s0;
    return -b * b * std::tanh(s) / std::cosh(s);
  };
  return theta;
}

struct Rng {
  std::mt19937 gen;
  explicit Rng(unsigned seed) : gen(seed) {}
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
  }
  wmc::Vec3 vec(double lo, double hi) {
    return {uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)};
  }
  // Random (b, c) on the unit circle with |b| bounded away from zero.
  std::pair<double, double> director_bc(double min_b = 0.25) {
    for (;;) {
      const double t = uniform(0.0, 2.0 * M_PI);
      if (std::abs(std::cos(t)) >= min_b) return {std::cos(t), std::sin(t)};
    }
  }
};

inline std::filesystem::path scratch_dir() {
  static const std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() /
             ("wmc-tests-" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

inline std::filesystem::path scratch_file(const std::string& name) {
  return scratch_dir() / name;
}

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
}

inline std::string read_text(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

#ifdef WMC_CLI_PATH
struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

// Runs the CLI with stdout/stderr captured to scratch files. Arguments are
// passed through a shell, so quote paths with spaces at the call site.
inline CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const auto out_path = scratch_file("cli-out-" + std::to_string(counter) + ".txt");
  const auto err_path = scratch_file("cli-err-" + std::to_string(counter) + ".txt");
  ++counter;
  const std::string cmd = std::string("\"") + WMC_CLI_PATH + "\" " + args + " > " +
                          out_path.string() + " 2> " + err_path.string();
  const int raw = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = (raw >= 0 && WIFEXITED(raw)) ? WEXITSTATUS(raw) : -1;
  r.out = read_text(out_path);
  r.err = read_text(err_path);
  return r;
}
#endif

}  // namespace testutil
