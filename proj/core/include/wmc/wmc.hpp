#pragma once

// Umbrella header for the weighted-minimal core library.

#include "wmc/area.hpp"
#include "wmc/bisect.hpp"
#include "wmc/curvature.hpp"
#include "wmc/curve.hpp"
#include "wmc/density.hpp"
#include "wmc/directrix_ode.hpp"
#include "wmc/errors.hpp"
#include "wmc/finite_diff.hpp"
#include "wmc/gallery.hpp"
#include "wmc/mesh.hpp"
#include "wmc/quadrature.hpp"
#include "wmc/ruled.hpp"
#include "wmc/surface.hpp"
#include "wmc/translation.hpp"
#include "wmc/types.hpp"
