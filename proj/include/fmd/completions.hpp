#pragma once

#include "fmd/predictive.hpp"

#include <array>

namespace fmd {

// Assertion that the conditional probabilities P(E_{N+1} | S_N = a)
// equal a/N exactly for every integer a in [a1, a2], together with
// monotone bounds pL at a = 0 and pU at a = N.  Degenerate windows are
// excluded: a1 = 0 would force pL = 0 and a2 = N would force pU = 1,
// both outside the open interval predictive entries must occupy.
struct PaNAssertion {
    int N;
    int a1;
    int a2;
    double pL;
    double pU;

    PaNAssertion(int N, int a1, int a2, double pL, double pU);

    // a1/N and a2/N as computed ratios.
    double lower_edge() const { return static_cast<double>(a1) / N; }
    double upper_edge() const { return static_cast<double>(a2) / N; }
};

// The four reference completions of the conditional probabilities
// outside the matching window.
enum class CompletionKind { Linear, Quartic, Weak, Strict };

enum class Side { Lower, Upper };

// Polynomial of degree at most four in (x - x0).
struct Poly4 {
    double x0;
    std::array<double, 5> c;

    double operator()(double x) const {
        const double t = x - x0;
        return c[0] + t * (c[1] + t * (c[2] + t * (c[3] + t * c[4])));
    }
    double derivative(double x) const {
        const double t = x - x0;
        return c[1] + t * (2.0 * c[2] + t * (3.0 * c[3] + t * 4.0 * c[4]));
    }
    bool is_cubic() const { return c[4] == 0.0; }
};

// Smooth completion curve for one side: level at the outer boundary
// (derivative 0 at x = 0 resp. x = 1), tangent to the frequency line at
// the window edge (value a1/N resp. a2/N, derivative 1).  The minimal-
// degree interpolant is the cubic Hermite through those four conditions;
// when that cubic is not monotone, the quartic with the double-contact
// correction term restoring monotonicity is returned instead.  No
// monotone quartic exists when the side's secant slope falls below 1/4;
// that raises NonMonotoneCompletionError.
Poly4 quartic_side_curve(const PaNAssertion& pan, Side side);

// Value of the completed predictive at one index a in [0, N].
double completion_value(const PaNAssertion& pan, CompletionKind kind, int a);

// Full completed predictive vector.  Entries inside [a1, a2] equal a/N
// as computed ratios; throws NonMonotoneCompletionError if the assembled
// vector ever decreases (possible only for Quartic).
PredictiveVector build_predictive(const PaNAssertion& pan, CompletionKind kind);

} // namespace fmd
