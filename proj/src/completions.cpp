#include "fmd/completions.hpp"

#include "fmd/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace fmd {

PaNAssertion::PaNAssertion(int N_, int a1_, int a2_, double pL_, double pU_)
    : N(N_), a1(a1_), a2(a2_), pL(pL_), pU(pU_) {
    if (N < 2) throw InvalidAssertionError("PaNAssertion: N must be at least 2");
    if (a1 < 1 || a2 < a1 || a2 > N - 1)
        throw InvalidAssertionError("PaNAssertion: require 1 <= a1 <= a2 <= N-1");
    if (!(pL > 0.0) || !(pL <= lower_edge()))
        throw InvalidAssertionError("PaNAssertion: require 0 < pL <= a1/N");
    if (!(pU >= upper_edge()) || !(pU < 1.0))
        throw InvalidAssertionError("PaNAssertion: require a2/N <= pU < 1");
}

namespace {

// Cubic Hermite coefficients in t over [0, h] with endpoint values and
// derivatives (y0, d0) and (y1, d1).
std::array<double, 5> hermite_cubic(double h, double y0, double y1, double d0,
                                    double d1) {
    const double delta = (y1 - y0) / h;
    return {y0, d0, (3.0 * delta - 2.0 * d0 - d1) / h,
            (d0 + d1 - 2.0 * delta) / (h * h), 0.0};
}

// Adds s * t^2 (h - t)^2, which vanishes with zero derivative at both
// ends and so preserves all four interpolation conditions.
std::array<double, 5> with_bump(std::array<double, 5> c, double h, double s) {
    c[2] += s * h * h;
    c[3] -= 2.0 * s * h;
    c[4] = s;
    return c;
}

// Exact minimum of the derivative over [0, h]: endpoints plus the real
// critical points of the (at most cubic) derivative.
double min_derivative(const std::array<double, 5>& c, double h) {
    const auto deriv = [&](double t) {
        return c[1] + t * (2.0 * c[2] + t * (3.0 * c[3] + t * 4.0 * c[4]));
    };
    double best = std::min(deriv(0.0), deriv(h));
    // Critical points solve 12 c4 t^2 + 6 c3 t + 2 c2 = 0.
    const double qa = 12.0 * c[4];
    const double qb = 6.0 * c[3];
    const double qc = 2.0 * c[2];
    if (qa == 0.0) {
        if (qb != 0.0) {
            const double t = -qc / qb;
            if (t > 0.0 && t < h) best = std::min(best, deriv(t));
        }
    } else {
        const double disc = qb * qb - 4.0 * qa * qc;
        if (disc >= 0.0) {
            const double r = std::sqrt(disc);
            for (const double t : {(-qb - r) / (2.0 * qa), (-qb + r) / (2.0 * qa)})
                if (t > 0.0 && t < h) best = std::min(best, deriv(t));
        }
    }
    return best;
}

// Hermite data for one side of the assertion, in t = x - x0 over [0, h].
struct SideSpec {
    double x0;
    double h;
    double y0, y1, d0, d1;
};

SideSpec side_spec(const PaNAssertion& pan, Side side) {
    if (side == Side::Lower) {
        const double m = pan.lower_edge();
        return {0.0, m, pan.pL, m, 0.0, 1.0};
    }
    const double e = pan.upper_edge();
    return {e, 1.0 - e, e, pan.pU, 1.0, 0.0};
}

Poly4 fit_side(const PaNAssertion& pan, Side side) {
    const SideSpec sp = side_spec(pan, side);
    const auto cubic = hermite_cubic(sp.h, sp.y0, sp.y1, sp.d0, sp.d1);
    if (min_derivative(cubic, sp.h) >= 0.0) return {sp.x0, cubic};

    // The cubic dips; add the double-contact bump.  With the endpoint
    // derivatives fixed at (0,1) or (1,0), the choice
    //   s = +-(3 delta - 1)/h^3,  delta = (y1 - y0)/h,
    // makes the derivative factor as (u - u*)^2 times a linear term in
    // u = t/h, so it is nonnegative on [0, h] exactly when delta >= 1/4.
    const double delta = (sp.y1 - sp.y0) / sp.h;
    if (delta + 1e-9 < 0.25)
        throw NonMonotoneCompletionError(
            "no monotone quartic joins this side: secant slope " +
            std::to_string(delta) + " is below 1/4");
    const double s = (side == Side::Upper ? (3.0 * delta - 1.0)
                                          : (1.0 - 3.0 * delta)) /
                     (sp.h * sp.h * sp.h);
    return {sp.x0, with_bump(cubic, sp.h, s)};
}

double curve_side_value(const PaNAssertion& pan, CompletionKind kind, int a,
                        const Poly4* lower, const Poly4* upper) {
    const int N = pan.N;
    if (a < pan.a1) {
        switch (kind) {
            case CompletionKind::Weak: return pan.pL;
            case CompletionKind::Strict: return pan.lower_edge();
            case CompletionKind::Linear:
                return pan.pL + (pan.lower_edge() - pan.pL) *
                                    (static_cast<double>(a) / pan.a1);
            case CompletionKind::Quartic:
                return (*lower)(static_cast<double>(a) / N);
        }
    }
    switch (kind) {
        case CompletionKind::Weak: return pan.pU;
        case CompletionKind::Strict: return pan.upper_edge();
        case CompletionKind::Linear:
            return pan.upper_edge() +
                   (pan.pU - pan.upper_edge()) *
                       (static_cast<double>(a - pan.a2) / (N - pan.a2));
        case CompletionKind::Quartic:
            return (*upper)(static_cast<double>(a) / N);
    }
    throw ValidationError("completion_value: unknown kind");
}

std::vector<double> assemble(const PaNAssertion& pan, CompletionKind kind) {
    const int N = pan.N;
    const Poly4 lower = (kind == CompletionKind::Quartic)
                            ? fit_side(pan, Side::Lower)
                            : Poly4{};
    const Poly4 upper = (kind == CompletionKind::Quartic)
                            ? fit_side(pan, Side::Upper)
                            : Poly4{};
    std::vector<double> v(static_cast<std::size_t>(N) + 1);
    for (int a = 0; a <= N; ++a) {
        if (a >= pan.a1 && a <= pan.a2)
            v[static_cast<std::size_t>(a)] = static_cast<double>(a) / N;
        else
            v[static_cast<std::size_t>(a)] =
                curve_side_value(pan, kind, a, &lower, &upper);
    }
    for (int a = 1; a <= N; ++a)
        if (v[static_cast<std::size_t>(a)] < v[static_cast<std::size_t>(a) - 1])
            throw NonMonotoneCompletionError(
                "completion decreases between a = " + std::to_string(a - 1) +
                " and a = " + std::to_string(a));
    return v;
}

} // namespace

Poly4 quartic_side_curve(const PaNAssertion& pan, Side side) {
    return fit_side(pan, side);
}

double completion_value(const PaNAssertion& pan, CompletionKind kind, int a) {
    if (a < 0 || a > pan.N)
        throw DimensionError("completion_value: a outside [0, N]");
    const std::vector<double> v = assemble(pan, kind);
    return v[static_cast<std::size_t>(a)];
}

PredictiveVector build_predictive(const PaNAssertion& pan, CompletionKind kind) {
    return PredictiveVector(pan.N, assemble(pan, kind));
}

} // namespace fmd
