#include "fmd/inversion.hpp"

#include "fmd/errors.hpp"
#include "fmd/kernels.hpp"
#include "fmd/logspace.hpp"
#include "fmd/special.hpp"

#include <cmath>
#include <vector>

namespace fmd {

MassFunction invert_to_mass(const PredictiveVector& p) {
    const int n = p.conditioning_events();
    const std::size_t s = static_cast<std::size_t>(n) + 1;

    // Accumulated log odds: prefix[a] = sum_{i<a} log(p_i / (1 - p_i)),
    // compensated in long double so the 1e5-term sums stay well inside
    // the 1e-10 round-trip budget.
    std::vector<double> prefix(s + 1);
    CompensatedSum acc;
    prefix[0] = 0.0;
    for (std::size_t i = 0; i < s; ++i) {
        const long double pi = static_cast<long double>(p[i]);
        acc.add(logl(pi) - log1pl(-pi));
        prefix[i + 1] = static_cast<double>(acc.value());
    }

    const LogFactorials lf(s);
    std::vector<double> lq(s + 1);
    kernels::unnormalized_log_mass(lf, prefix, lq);
    return MassFunction::from_log_unnormalized(std::move(lq));
}

PredictiveVector mass_to_predictive(const MassFunction& q) {
    if (!q.strictly_positive())
        throw DegenerateCaseError(
            "mass_to_predictive: a zero component leaves the implied "
            "conditional probabilities undetermined");
    const int n = q.events();
    std::vector<double> p(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        const double up = std::log(static_cast<double>(a + 1)) + q.log_at(a + 1);
        const double down = std::log(static_cast<double>(n - a)) + q.log_at(a);
        p[static_cast<std::size_t>(a)] = std::exp(up - log_add(up, down));
    }
    return PredictiveVector(n - 1, std::move(p));
}

double roundtrip_check(const MassFunction& q) {
    const MassFunction rebuilt = invert_to_mass(mass_to_predictive(q));
    double worst = 0.0;
    for (std::size_t a = 0; a < q.size(); ++a) {
        const double d = std::fabs(q.at(a) - rebuilt.at(a));
        if (d > worst) worst = d;
    }
    return worst;
}

} // namespace fmd
