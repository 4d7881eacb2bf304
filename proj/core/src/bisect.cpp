#include "wmc/bisect.hpp"

#include <algorithm>
#include <sstream>

#include "wmc/errors.hpp"

namespace wmc {

double bisect(const std::function<double(double)>& f, double lo, double hi, double xtol) {
  if (!(xtol > 0)) throw InvalidParams("bisect requires xtol > 0");
  if (lo > hi) std::swap(lo, hi);
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    std::ostringstream msg;
    msg << "no sign change over [" << lo << ", " << hi << "]: f(lo) = " << flo
        << ", f(hi) = " << fhi;
    throw NoSignChange(msg.str());
  }
  for (int it = 0; it < 200 && (hi - lo) > xtol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (fhi > 0.0)) {
      hi = mid;
      fhi = fm;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace wmc
