#pragma once

#include <cstddef>
#include <vector>

namespace fmd {

// Harmonic number H(n) = sum_{a=1}^{n} 1/a, accumulated in descending
// order of a in long double.
double harmonic(long long n);

// log n! for a single argument, via lgamma.
double log_factorial(long long n);

// log C(n, k) for a single pair.
double log_choose(long long n, long long k);

// Prefix table of log factorials, built once per bulk operation.  The
// entries are compensated long double sums of log j, so differences of
// table values (log binomial and log hypergeometric coefficients) keep
// absolute errors near 1e-15 even at n = 1e5 where the raw magnitudes
// reach 1e6.
class LogFactorials {
public:
    explicit LogFactorials(std::size_t max_n);

    long double operator()(std::size_t n) const { return lf_[n]; }

    // log C(n, k); requires k <= n <= max_n.
    long double choose(std::size_t n, std::size_t k) const {
        return lf_[n] - lf_[k] - lf_[n - k];
    }

    std::size_t max_n() const { return lf_.size() - 1; }

private:
    std::vector<long double> lf_;
};

// Regularized incomplete beta function I_x(a, b), evaluated by the
// Lentz continued fraction with the convergence switch at
// x = (a+1)/(a+b+2).  Relative tolerance 1e-12 or better; throws
// PrecisionError if the fraction fails to converge.
double ibeta_reg(double a, double b, double x);

// I_{x2}(a, b) - I_{x1}(a, b) for x1 <= x2, arranged so that same-side
// tail differences are taken between directly computed tails rather than
// between complements (avoids cancellation when both values sit near 1).
double ibeta_reg_diff(double a, double b, double x1, double x2);

} // namespace fmd
