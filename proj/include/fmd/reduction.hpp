#pragma once

#include "fmd/mass.hpp"
#include "fmd/predictive.hpp"

namespace fmd {

// One-step reduction of a mass over n events to n-1 events:
//   out_a = [ (n - a) q_a + (a + 1) q_{a+1} ] / n.
MassFunction reduce_mass_one(const MassFunction& q);

// Reduction of a mass over n events directly to target_events <= n, by
// the hypergeometric mixture.  Cost O(target_events * n); target_events
// equal to n returns the input unchanged.
MassFunction reduce_mass_to(const MassFunction& q, int target_events);

// One-step reduction of a predictive vector over N conditioning events
// to N-1:
//   out_a = p_a / (1 - p_{a+1} + p_a).
PredictiveVector reduce_predictive(const PredictiveVector& p);

} // namespace fmd
