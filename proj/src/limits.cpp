#include "fmd/limits.hpp"

#include "fmd/errors.hpp"
#include "fmd/logspace.hpp"
#include "fmd/quadrature.hpp"
#include "fmd/runtime.hpp"
#include "fmd/special.hpp"

#include <cmath>
#include <exception>
#include <string>

namespace fmd {

IncompleteBetaParams::IncompleteBetaParams(double theta1_, double theta2_,
                                           double alpha_, double beta_)
    : theta1(theta1_), theta2(theta2_), alpha(alpha_), beta(beta_),
      comp1(1.0 - theta1_), comp2(1.0 - theta2_) {
    if (!(theta1 > 0.0) || !(theta1 < theta2) || !(theta2 < 1.0))
        throw ValidationError(
            "IncompleteBetaParams: require 0 < theta1 < theta2 < 1");
    if (!(alpha >= 0.0) || !(beta >= 0.0))
        throw ValidationError(
            "IncompleteBetaParams: shape exponents must be nonnegative");
}

IncompleteBetaParams IncompleteBetaParams::reversed() const {
    return IncompleteBetaParams(raw_tag{}, comp2, comp1, beta, alpha, theta2,
                                theta1);
}

double IncompleteBetaParams::logit_width() const {
    return (std::log(theta2) + std::log(comp1)) -
           (std::log(theta1) + std::log(comp2));
}

std::pair<int, int> fm_window(int N, double theta1, double theta2) {
    if (N < 1)
        throw DimensionError("fm_window: N must be positive");
    if (!(theta1 > 0.0) || !(theta1 <= theta2) || !(theta2 < 1.0))
        throw ValidationError("fm_window: require 0 < theta1 <= theta2 < 1");

    int a1 = std::max(0, static_cast<int>(std::floor(theta1 * N)) - 2);
    while (a1 <= N && static_cast<double>(a1) / N < theta1)
        ++a1;
    int a2 = std::min(N, static_cast<int>(std::ceil(theta2 * N)) + 2);
    while (a2 >= 0 && static_cast<double>(a2) / N > theta2)
        --a2;
    if (a1 > N || a2 < 0 || a1 > a2)
        throw EmptyWindowError("fm_window: no integer a with theta1 <= a/" +
                               std::to_string(N) + " <= theta2");
    return {a1, a2};
}

namespace {

void require_zero_shapes(const IncompleteBetaParams& params,
                         const char* where) {
    if (params.alpha != 0.0 || params.beta != 0.0)
        throw UnsupportedParametersError(
            std::string(where) + ": only alpha = beta = 0 is supported");
}

// log of Integral_{lo}^{hi} u^(aa-1) (1-u)^(n-aa-1) du plus the
// log C(n,aa) prefactor, for the canonical index aa <= n - aa.
double log_entry_canonical(int n, int aa, double lo, double hi) {
    if (aa == 0) {
        const int m = n - 1;
        const auto g = [m](double u) {
            return -std::log(u) + m * std::log1p(-u);
        };
        return log_integrate_exp(g, lo, hi);
    }
    const double diff = ibeta_reg_diff(static_cast<double>(aa),
                                       static_cast<double>(n - aa), lo, hi);
    if (!(diff > 0.0))
        return neg_inf;
    return std::log(static_cast<double>(n)) -
           std::log(static_cast<double>(aa)) -
           std::log(static_cast<double>(n - aa)) + std::log(diff);
}

double log_mixture_entry(int n, int a, const IncompleteBetaParams& params) {
    int aa = a;
    double lo = params.theta1;
    double hi = params.theta2;
    if (2 * a > n) {
        aa = n - a;
        lo = params.comp2;
        hi = params.comp1;
    }
    return log_entry_canonical(n, aa, lo, hi) -
           std::log(params.logit_width());
}

} // namespace

std::vector<double> mixture_log_values_serial(
    int n_events, const IncompleteBetaParams& params) {
    if (n_events < 1)
        throw DimensionError("mixture_log_values: n_events must be positive");
    require_zero_shapes(params, "mixture_log_values");
    std::vector<double> lq(static_cast<size_t>(n_events) + 1);
    for (int a = 0; a <= n_events; ++a)
        lq[static_cast<size_t>(a)] = log_mixture_entry(n_events, a, params);
    return lq;
}

std::vector<double> mixture_log_values(int n_events,
                                       const IncompleteBetaParams& params) {
    if (n_events < 1)
        throw DimensionError("mixture_log_values: n_events must be positive");
    require_zero_shapes(params, "mixture_log_values");
    std::vector<double> lq(static_cast<size_t>(n_events) + 1);
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 16) num_threads(fmd::max_threads())
    for (int a = 0; a <= n_events; ++a) {
        try {
            lq[static_cast<size_t>(a)] = log_mixture_entry(n_events, a, params);
        } catch (...) {
#pragma omp critical
            if (!err)
                err = std::current_exception();
            lq[static_cast<size_t>(a)] = neg_inf;
        }
    }
    if (err)
        std::rethrow_exception(err);
    return lq;
}

MixtureResult incomplete_beta_mixture(int n_events,
                                      const IncompleteBetaParams& params) {
    std::vector<double> lq = mixture_log_values(n_events, params);
    CompensatedSum sum;
    for (double lv : lq)
        if (lv != neg_inf)
            sum.add(expl(static_cast<long double>(lv)));
    return {MassFunction::from_log_unnormalized(std::move(lq)),
            static_cast<double>(sum.value())};
}

MassFunction incomplete_beta_mixture_mass(int n_events,
                                          const IncompleteBetaParams& params) {
    return incomplete_beta_mixture(n_events, params).mass;
}

double incomplete_beta_density(double theta,
                               const IncompleteBetaParams& params) {
    require_zero_shapes(params, "incomplete_beta_density");
    if (theta <= params.theta1 || theta >= params.theta2)
        return 0.0;
    return 1.0 / (params.logit_width() * theta * (1.0 - theta));
}

double compare_to_limit(const MassFunction& q,
                        const IncompleteBetaParams& params,
                        double interior_margin) {
    require_zero_shapes(params, "compare_to_limit");
    if (!(interior_margin >= 0.0))
        throw ValidationError(
            "compare_to_limit: interior margin must be nonnegative");
    const DensityHistogram hist = density_histogram(q);
    const double lo = params.theta1 + interior_margin;
    const double hi = params.theta2 - interior_margin;
    double sup = 0.0;
    for (size_t a = 0; a < hist.bin_centers.size(); ++a) {
        const double x = hist.bin_centers[a];
        if (x <= lo || x >= hi)
            continue;
        sup = std::max(sup, std::fabs(hist.densities[a] -
                                      incomplete_beta_density(x, params)));
    }
    return sup;
}

double compare_to_limit(const MassFunction& q,
                        const IncompleteBetaParams& params) {
    return compare_to_limit(q, params,
                            0.02 * (params.theta2 - params.theta1));
}

} // namespace fmd
