#include "wmc/directrix_ode.hpp"

#include <cmath>
#include <cstdlib>

#include "wmc/errors.hpp"

namespace wmc {

OdeSolution integrate_directrix(double b, double c, const Vec3& init_pos,
                                const Vec3& init_vel, double u_end, double step) {
  if (!(step > 0)) throw InvalidParams("integration step must be positive");
  if (std::abs(b * b + c * c - 1.0) > 1e-8) {
    throw InvalidInit("(b, c) must satisfy b^2 + c^2 = 1");
  }
  if (std::abs(init_vel.norm() - 1.0) > 1e-8) {
    throw InvalidInit("initial velocity must have unit norm");
  }
  if (std::abs(init_vel.dot(Vec3(0, b, c))) > 1e-8) {
    throw InvalidInit("initial velocity must be orthogonal to the director (0, b, c)");
  }

  auto acc = [b, c](const Vec3& vel) {
    return Vec3(-vel.x() * vel.z(), -vel.y() * vel.z() - c * b, b * b - vel.z() * vel.z());
  };

  OdeSolution sol;
  sol.step = step;
  sol.b = b;
  sol.c = c;
  const int n = std::max(1, static_cast<int>(std::llround(std::abs(u_end) / step)));
  const double h = u_end / n;
  sol.samples.reserve(static_cast<std::size_t>(n) + 1);
  Vec3 pos = init_pos;
  Vec3 vel = init_vel;
  sol.samples.push_back({0.0, pos, vel});
  for (int k = 0; k < n; ++k) {
    const Vec3 k1p = vel, k1v = acc(vel);
    const Vec3 v2 = vel + 0.5 * h * k1v;
    const Vec3 k2p = v2, k2v = acc(v2);
    const Vec3 v3 = vel + 0.5 * h * k2v;
    const Vec3 k3p = v3, k3v = acc(v3);
    const Vec3 v4 = vel + h * k3v;
    const Vec3 k4p = v4, k4v = acc(v4);
    pos += (h / 6.0) * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
    vel += (h / 6.0) * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    sol.samples.push_back({(k + 1) * h, pos, vel});
  }
  return sol;
}

DirectrixState closed_form_directrix(double A, double b, double c, double u) {
  if (!(A > 0)) throw InvalidParams("family constant A must be positive");
  if (b == 0.0) throw InvalidParams("closed-form directrix requires b != 0");
  const double E1 = std::exp(b * u);
  const double E2 = A * E1 * E1;
  const double L = std::log(std::exp(-b * u) + A * E1);
  const double w = (E2 - 1.0) / (E2 + 1.0);
  DirectrixState st;
  st.position = Vec3((2.0 / b) * std::atan(std::sqrt(A) * E1), -(c / b) * L, L);
  st.velocity = Vec3(2.0 * std::sqrt(A) * E1 / (1.0 + E2), -c * w, b * w);
  return st;
}

}  // namespace wmc
