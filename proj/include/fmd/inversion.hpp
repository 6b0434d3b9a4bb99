#pragma once

#include "fmd/mass.hpp"
#include "fmd/predictive.hpp"

namespace fmd {

// Mass of S_{N+1} implied by a predictive vector, via the generalized
// Binomial product form: q_a proportional to C(N+1, a) times the product
// of the first a odds.  Computed in log space; N up to 1e5.
MassFunction invert_to_mass(const PredictiveVector& p);

// Predictive vector implied by a strictly positive mass over S_{N+1}:
//   p_a = (a+1) q_{a+1} / [ (a+1) q_{a+1} + (N+1-a) q_a ].
// Throws DegenerateCaseError if any component is zero (the standard case
// requires strict positivity).
PredictiveVector mass_to_predictive(const MassFunction& q);

// Max absolute linear-space error of invert_to_mass(mass_to_predictive(q))
// against q.
double roundtrip_check(const MassFunction& q);

} // namespace fmd
