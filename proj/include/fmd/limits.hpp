#pragma once

#include "fmd/mass.hpp"

#include <utility>
#include <vector>

namespace fmd {

// Parameters of the four-parameter incomplete-beta mixing density.  Only
// alpha = beta = 0 is exercised by the operations below; nonzero shapes are
// an extension point and rejected with UnsupportedParametersError.
//
// The complements are stored explicitly so that reversed() is an exact
// field swap: no 1 - (1 - theta) round trip.
struct IncompleteBetaParams {
    double theta1;
    double theta2;
    double alpha;
    double beta;
    double comp1; // 1 - theta1
    double comp2; // 1 - theta2

    IncompleteBetaParams(double theta1, double theta2, double alpha = 0.0,
                         double beta = 0.0);

    // The mirrored parameters (1-theta2, 1-theta1), swapping the shape
    // exponents alongside.
    IncompleteBetaParams reversed() const;

    // Z = logit(theta2) - logit(theta1), the density normalizer.
    double logit_width() const;

private:
    struct raw_tag {};
    IncompleteBetaParams(raw_tag, double t1, double t2, double a, double b,
                         double c1, double c2)
        : theta1(t1), theta2(t2), alpha(a), beta(b), comp1(c1), comp2(c2) {}
};

// Smallest a with a/N >= theta1 and largest a with a/N <= theta2, the
// frequency-mimicking window cut out of [0, N] by the interval.
std::pair<int, int> fm_window(int N, double theta1, double theta2);

// 1/(Z theta (1-theta)) inside the open interval (theta1, theta2), zero
// outside.
double incomplete_beta_density(double theta, const IncompleteBetaParams& params);

// Log-space mixture components log q_a for a in [0, n_events]:
//   q_a = C(n,a) (1/Z) Integral_{theta1}^{theta2} t^(a-1) (1-t)^(n-a-1) dt.
// Interior entries use regularized incomplete-beta differences, boundary
// entries adaptive quadrature of the log integrand.  The two variants are
// identical in output; one runs the entries in parallel.
std::vector<double> mixture_log_values_serial(int n_events,
                                              const IncompleteBetaParams& params);
std::vector<double> mixture_log_values(int n_events,
                                       const IncompleteBetaParams& params);

struct MixtureResult {
    MassFunction mass;
    double prenorm_sum; // linear-space sum before renormalization
};

MixtureResult incomplete_beta_mixture(int n_events,
                                      const IncompleteBetaParams& params);
MassFunction incomplete_beta_mixture_mass(int n_events,
                                          const IncompleteBetaParams& params);

// Sup over histogram abscissas strictly inside
// (theta1 + margin, theta2 - margin) of |density histogram - density|.
double compare_to_limit(const MassFunction& q,
                        const IncompleteBetaParams& params,
                        double interior_margin);

// Default interior margin 0.02 (theta2 - theta1).
double compare_to_limit(const MassFunction& q,
                        const IncompleteBetaParams& params);

} // namespace fmd
