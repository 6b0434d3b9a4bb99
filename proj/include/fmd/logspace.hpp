#pragma once

#include <cmath>
#include <limits>
#include <span>

// Natural-log-space arithmetic used throughout the library.  Masses are
// stored as log values so that components far below the linear floor
// (around 1e-300) survive reduction and extension arithmetic intact.

namespace fmd {

inline constexpr double neg_inf = -std::numeric_limits<double>::infinity();

// log(exp(a) + exp(b)) without overflow; handles -inf operands.
inline double log_add(double a, double b) {
    if (a == neg_inf) return b;
    if (b == neg_inf) return a;
    const double m = (a > b) ? a : b;
    return m + std::log1p(std::exp(-(std::fabs(a - b))));
}

// log(sum exp(v)) with a max shift.  The accumulation runs in long double
// with Kahan compensation so vectors of 1e5 components stay reproducible
// to well below the library's 1e-12 targets.  Serial on purpose: results
// must not depend on the thread count.
inline double log_sum_exp(std::span<const double> v) {
    double m = neg_inf;
    for (double x : v)
        if (x > m) m = x;
    if (m == neg_inf) return neg_inf;
    long double sum = 0.0L;
    long double comp = 0.0L;
    for (double x : v) {
        const long double term = expl(static_cast<long double>(x) - m);
        const long double y = term - comp;
        const long double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return m + static_cast<double>(logl(sum));
}

// Kahan-compensated accumulator, kept in long double.  Used for prefix
// sums of log odds and for harmonic-type series.
class CompensatedSum {
public:
    void add(long double x) {
        const long double y = x - comp_;
        const long double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    long double value() const { return sum_; }

private:
    long double sum_ = 0.0L;
    long double comp_ = 0.0L;
};

} // namespace fmd
