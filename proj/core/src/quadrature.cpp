#include "wmc/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "wmc/errors.hpp"

namespace wmc {
namespace {

// 8-point Gauss-Legendre nodes and weights on [-1, 1].
constexpr double kNode[4] = {0.18343464249564980, 0.52553240991632899,
                             0.79666647741362674, 0.96028985649753623};
constexpr double kWeight[4] = {0.36268378337836198, 0.31370664587788729,
                               0.22238103445337447, 0.10122853629037626};

template <typename T, typename F, typename Zero>
T composite(const F& f, double a, double b, double max_panel, Zero zero) {
  if (!(max_panel > 0)) throw InvalidParams("quadrature panel length must be positive");
  T total = zero();
  if (a == b) return total;
  const double span = b - a;
  const int panels = std::max(1, static_cast<int>(std::ceil(std::abs(span) / max_panel)));
  const double h = span / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    const double half = 0.5 * h;
    T acc = zero();
    for (int k = 0; k < 4; ++k) {
      acc += kWeight[k] * (f(mid + half * kNode[k]) + f(mid - half * kNode[k]));
    }
    total += half * acc;
  }
  return total;
}

}  // namespace

double gl_integrate(const std::function<double(double)>& f, double a, double b,
                    double max_panel) {
  return composite<double>(f, a, b, max_panel, [] { return 0.0; });
}

Vec3 gl_integrate3(const std::function<Vec3(double)>& f, double a, double b,
                   double max_panel) {
  return composite<Vec3>(f, a, b, max_panel, [] { return Vec3(Vec3::Zero()); });
}

}  // namespace wmc
