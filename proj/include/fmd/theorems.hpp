#pragma once

#include "fmd/completions.hpp"
#include "fmd/mass.hpp"

#include <utility>
#include <vector>

namespace fmd {

// ---------------------------------------------------------------------
// Frequency mimicking over the whole positive domain (a/N matched for
// every a in [1, N-1]).  The mass over S_{N+1} is then pinned by the two
// free components (q0, q1):
//   q_a     = (1/a) [N/(N-a+1)] q_1           for a = 2..N
//   q_{N+1} = 1 - q0 - 2 q1 [N/(N+1)] H(N)
// with q1 admissible only up to the bound below.
// ---------------------------------------------------------------------

// Largest admissible q1 given q0: (1 - q0) / (2 [N/(N+1)] H(N)).
double full_fm_q1_bound(int N, double q0);

// The implied mass; throws BoundViolationError if (q0, q1) is
// inadmissible.
MassFunction full_fm_mass(int N, double q0, double q1);

struct SumBoundCheck {
    double lhs; // sum of the interior components of the reduced mass
    double rhs; // 2^M [(N+2-M)/(N+1)] q1
};

// Reduces the full-domain mass to M events and compares the interior
// mass sum_{a=1}^{M-1} q_{a,M} against its bound.
SumBoundCheck interior_sum_bound_check(int N, int M, double q0, double q1);

// ---------------------------------------------------------------------
// Reduction of an assertion: PaN[a1, a2, pL, pU] implies
// Pan[a1, a2 - (N-n), pL, pU] for every n in [N - (a2-a1), N-1].
// ---------------------------------------------------------------------
std::vector<PaNAssertion> implied_reductions(const PaNAssertion& pan);

// Builds the completed predictive, reduces it step by step through every
// implied level, and returns the maximum |p_{a,n} - a/n| over all implied
// matching windows.
double reduction_chain_deviation(const PaNAssertion& pan, CompletionKind kind);

// ---------------------------------------------------------------------
// Extension: adding one more event at a chosen count a_star forces
// frequency mimicking at level N+1 across the whole widened window.
// ---------------------------------------------------------------------
struct ForcedValue {
    int a;
    double p; // a / (N+1)
};

// The forced values p_{a,N+1} = a/(N+1) for every a in [a1, a2+1],
// derived by the forward and backward one-step-reduction sweeps from
// a_star.  Throws NotExtendibleError when a_star/(N+1) falls outside
// [a1/N, a2/N] (checked in exact integer arithmetic).
std::vector<ForcedValue> forced_extension(const PaNAssertion& pan, int a_star);

// K-fold extension scenario with fresh boundary bounds.
struct ExtensionScenario {
    PaNAssertion base;
    int K;
    double pL_ext;
    double pU_ext;

    ExtensionScenario(PaNAssertion base, int K, double pL_ext, double pU_ext);
};

// The widened assertion Pa(N+K)[a1, a2+K, pL_ext, pU_ext].
PaNAssertion extend_assertion(const ExtensionScenario& scenario);

struct InteriorMassResult {
    double direct_sum;  // sum of q_a over the matching window [a1, a2+K]
    double closed_form; // q_{a1} [a1 (T-a1)/T] [harmonic bracket], T = N+K+1
    double log_direct;
    double log_closed;
};

// Mass remaining inside the matching window of the extended predictive,
// computed both by direct log-space summation and by the harmonic-number
// closed form anchored at q_{a1}.
InteriorMassResult interior_mass(const ExtensionScenario& scenario,
                                 CompletionKind kind);

} // namespace fmd
