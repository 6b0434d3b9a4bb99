#include "fmd/reduction.hpp"

#include "fmd/errors.hpp"
#include "fmd/kernels.hpp"
#include "fmd/logspace.hpp"
#include "fmd/special.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace fmd {

MassFunction reduce_mass_one(const MassFunction& q) {
    const int n = q.events();
    if (n < 2)
        throw DimensionError("reduce_mass_one: need a mass over at least two events");
    const double ln = std::log(static_cast<double>(n));
    std::vector<double> lq(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        const double keep = std::log(static_cast<double>(n - a)) + q.log_at(a) - ln;
        const double carry = std::log(static_cast<double>(a + 1)) + q.log_at(a + 1) - ln;
        lq[static_cast<std::size_t>(a)] = log_add(keep, carry);
    }
    return MassFunction::from_log_unnormalized(std::move(lq));
}

MassFunction reduce_mass_to(const MassFunction& q, int target_events) {
    const int n = q.events();
    if (target_events < 1 || target_events > n)
        throw DimensionError("reduce_mass_to: target " + std::to_string(target_events) +
                             " outside [1, " + std::to_string(n) + "]");
    if (target_events == n) return q;
    const LogFactorials lf(static_cast<std::size_t>(n));
    std::vector<double> lq(static_cast<std::size_t>(target_events) + 1);
    kernels::hypergeometric_reduce(lf, q.log_values(), lq);
    return MassFunction::from_log_unnormalized(std::move(lq));
}

PredictiveVector reduce_predictive(const PredictiveVector& p) {
    const int n = p.conditioning_events();
    if (n < 1)
        throw DimensionError("reduce_predictive: need at least one conditioning event");
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
        out[static_cast<std::size_t>(a)] = p[a] / (1.0 - p[a + 1] + p[a]);
    return PredictiveVector(n - 1, std::move(out));
}

} // namespace fmd
