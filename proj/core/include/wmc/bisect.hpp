#pragma once

#include <functional>

namespace wmc {

// Bisection on [lo, hi] down to interval width xtol; returns the midpoint of
// the final bracket. Requires a sign change (throws NoSignChange otherwise).
double bisect(const std::function<double(double)>& f, double lo, double hi, double xtol);

}  // namespace wmc
