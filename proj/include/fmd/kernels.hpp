#pragma once

#include "fmd/special.hpp"

#include <span>

// Hot loops shared by the inversion and reduction operations.  Each
// kernel has an OpenMP variant (used by the library) and a serial
// reference variant kept for testing and benchmarking.  Parallelism is
// always across independent output components, never across a single
// accumulation, so results are bit-identical for any thread count.

namespace fmd::kernels {

// out[a] = log C(s, a) + odds_prefix[a], where s = out.size() - 1 and
// odds_prefix[a] is the accumulated log odds of the first a predictive
// components.  This is the unnormalized log mass of the sum of s events.
void unnormalized_log_mass_serial(const LogFactorials& lf,
                                  std::span<const double> odds_prefix,
                                  std::span<double> out);
void unnormalized_log_mass(const LogFactorials& lf,
                           std::span<const double> odds_prefix,
                           std::span<double> out);

// Log-space hypergeometric reduction of a mass over s events to a mass
// over M = out.size() - 1 events:
//   out[a] = logsumexp_A [ log C(A,a) + log C(s-A, M-a) - log C(s, M) + lq[A] ]
// with A running over [a, s - (M - a)].  Cost O(M * s).
void hypergeometric_reduce_serial(const LogFactorials& lf,
                                  std::span<const double> lq,
                                  std::span<double> out);
void hypergeometric_reduce(const LogFactorials& lf, std::span<const double> lq,
                           std::span<double> out);

} // namespace fmd::kernels
