#include "fmd/kernels.hpp"

#include "fmd/logspace.hpp"
#include "fmd/runtime.hpp"

#include <cmath>

namespace fmd::kernels {

namespace {

// One component of the reduced mass: streaming log-sum-exp with a
// running max, accumulated in long double.
double reduce_entry(const LogFactorials& lf, std::span<const double> lq,
                    int s, int M, int a) {
    const long double lcsM = lf.choose(static_cast<std::size_t>(s),
                                       static_cast<std::size_t>(M));
    double m = neg_inf;
    long double sum = 0.0L;
    const int hi = s - (M - a);
    for (int A = a; A <= hi; ++A) {
        if (lq[A] == neg_inf) continue;
        const long double lw = lf.choose(static_cast<std::size_t>(A),
                                         static_cast<std::size_t>(a)) +
                               lf.choose(static_cast<std::size_t>(s - A),
                                         static_cast<std::size_t>(M - a)) -
                               lcsM;
        const double term = static_cast<double>(lw) + lq[A];
        if (term <= m) {
            sum += expl(static_cast<long double>(term) - m);
        } else {
            sum = sum * expl(static_cast<long double>(m) - term) + 1.0L;
            m = term;
        }
    }
    if (m == neg_inf) return neg_inf;
    return m + static_cast<double>(logl(sum));
}

} // namespace

void unnormalized_log_mass_serial(const LogFactorials& lf,
                                  std::span<const double> odds_prefix,
                                  std::span<double> out) {
    const std::size_t s = out.size() - 1;
    for (std::size_t a = 0; a < out.size(); ++a)
        out[a] = static_cast<double>(lf.choose(s, a)) + odds_prefix[a];
}

void unnormalized_log_mass(const LogFactorials& lf,
                           std::span<const double> odds_prefix,
                           std::span<double> out) {
    const std::size_t s = out.size() - 1;
    const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static) num_threads(fmd::max_threads())
    for (std::ptrdiff_t a = 0; a < count; ++a)
        out[a] = static_cast<double>(lf.choose(s, static_cast<std::size_t>(a))) +
                 odds_prefix[a];
}

void hypergeometric_reduce_serial(const LogFactorials& lf,
                                  std::span<const double> lq,
                                  std::span<double> out) {
    const int s = static_cast<int>(lq.size()) - 1;
    const int M = static_cast<int>(out.size()) - 1;
    for (int a = 0; a <= M; ++a)
        out[a] = reduce_entry(lf, lq, s, M, a);
}

void hypergeometric_reduce(const LogFactorials& lf, std::span<const double> lq,
                           std::span<double> out) {
    const int s = static_cast<int>(lq.size()) - 1;
    const int M = static_cast<int>(out.size()) - 1;
#pragma omp parallel for schedule(static) num_threads(fmd::max_threads())
    for (int a = 0; a <= M; ++a)
        out[a] = reduce_entry(lf, lq, s, M, a);
}

} // namespace fmd::kernels
