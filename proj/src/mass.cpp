#include "fmd/mass.hpp"

#include "fmd/errors.hpp"
#include "fmd/logspace.hpp"

#include <cmath>
#include <string>

namespace fmd {

MassFunction::MassFunction(int events, std::vector<double> lq)
    : events_(events), logq_(std::move(lq)) {}

MassFunction MassFunction::from_linear(const std::vector<double>& q) {
    if (q.size() < 2)
        throw DimensionError("MassFunction: need at least two components");
    CompensatedSum sum;
    for (std::size_t a = 0; a < q.size(); ++a) {
        if (!(q[a] >= 0.0))
            throw InvalidMassError("MassFunction: component " + std::to_string(a) +
                                   " is negative or NaN");
        sum.add(q[a]);
    }
    const double total = static_cast<double>(sum.value());
    if (std::fabs(total - 1.0) > 1e-9)
        throw InvalidMassError("MassFunction: components sum to " +
                               std::to_string(total) +
                               ", outside 1e-9 of 1");
    std::vector<double> lq(q.size());
    const double shift = std::log(total);
    for (std::size_t a = 0; a < q.size(); ++a)
        lq[a] = (q[a] == 0.0) ? neg_inf : std::log(q[a]) - shift;
    return MassFunction(static_cast<int>(q.size()) - 1, std::move(lq));
}

MassFunction MassFunction::from_log_unnormalized(std::vector<double> lq) {
    if (lq.size() < 2)
        throw DimensionError("MassFunction: need at least two components");
    for (std::size_t a = 0; a < lq.size(); ++a)
        if (std::isnan(lq[a]) || lq[a] == std::numeric_limits<double>::infinity())
            throw InvalidMassError("MassFunction: log component " +
                                   std::to_string(a) + " is not finite or -inf");
    const double norm = log_sum_exp(lq);
    if (norm == neg_inf)
        throw InvalidMassError("MassFunction: all components are zero");
    for (double& v : lq)
        if (v != neg_inf) v -= norm;
    const int n_events = static_cast<int>(lq.size()) - 1;
    return MassFunction(n_events, std::move(lq));
}

double MassFunction::at(std::size_t a) const {
    return std::exp(logq_[a]);
}

std::vector<double> MassFunction::linear_values() const {
    std::vector<double> out(logq_.size());
    for (std::size_t a = 0; a < logq_.size(); ++a) out[a] = std::exp(logq_[a]);
    return out;
}

bool MassFunction::strictly_positive() const {
    for (double v : logq_)
        if (v == neg_inf) return false;
    return true;
}

DensityHistogram density_histogram(const MassFunction& q) {
    const int n = q.events();
    DensityHistogram h;
    h.bin_width = 1.0 / (n + 1);
    h.bin_centers.resize(q.size());
    h.densities.resize(q.size());
    for (std::size_t a = 0; a < q.size(); ++a) {
        h.bin_centers[a] = static_cast<double>(a) / n;
        h.densities[a] = (n + 1) * q.at(a);
    }
    return h;
}

} // namespace fmd
