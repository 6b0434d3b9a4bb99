#pragma once

#include <functional>

namespace fmd {

// log of the integral of exp(g(x)) over [lo, hi], for smooth g.  The
// integrand is max-shifted before any exponential is taken, so g may
// range over magnitudes far outside the linear floor.  Adaptive bisection
// (Simpson refinement) with absolute tolerance 1e-14 relative to the
// shifted peak; throws PrecisionError if refinement bottoms out.
double log_integrate_exp(const std::function<double(double)>& g, double lo,
                         double hi);

} // namespace fmd
