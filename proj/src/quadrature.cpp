#include "fmd/quadrature.hpp"

#include "fmd/errors.hpp"
#include "fmd/logspace.hpp"

#include <cmath>

namespace fmd {

namespace {

using Fn = std::function<double(double)>;

double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const Fn& f, double a, double b, double fa, double fm, double fb,
             double whole, double tol, int depth) {
    if (depth > 64)
        throw PrecisionError("log_integrate_exp: refinement limit reached");
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double delta = left + right - whole;
    if (std::fabs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

} // namespace

double log_integrate_exp(const Fn& g, double lo, double hi) {
    if (!(lo < hi))
        throw ValidationError("log_integrate_exp: require lo < hi");

    // Coarse scan for the shift; the integrands handled here are smooth
    // and unimodal or monotone, so 65 samples locate the peak region.
    constexpr int scan = 64;
    double shift = neg_inf;
    for (int i = 0; i <= scan; ++i) {
        const double x = lo + (hi - lo) * i / scan;
        const double v = g(x);
        if (v > shift) shift = v;
    }
    if (shift == neg_inf)
        throw PrecisionError("log_integrate_exp: integrand vanished everywhere");

    const auto f = [&](double x) { return std::exp(g(x) - shift); };
    const double fa = f(lo);
    const double fb = f(hi);
    const double m = 0.5 * (lo + hi);
    const double fm = f(m);
    const double whole = simpson(fa, fm, fb, hi - lo);
    const double tol = 1e-14 * (hi - lo);
    const double integral = adapt(f, lo, hi, fa, fm, fb, whole, tol, 0);
    return shift + std::log(integral);
}

} // namespace fmd
