#pragma once

#include <span>
#include <vector>

namespace fmd {

// Probability mass of the sum of n exchangeable events: q_a = P(S_n = a)
// for a = 0..n.  Stored as natural-log values; components are allowed to
// be exactly zero (log value -inf), and components far below the linear
// floor (1e-300) pass through unharmed.
class MassFunction {
public:
    // From linear probabilities.  Requires every value nonnegative and the
    // sum within 1e-9 of 1; renormalizes exactly afterwards.
    static MassFunction from_linear(const std::vector<double>& q);

    // From unnormalized log values; normalizes by log-sum-exp.
    static MassFunction from_log_unnormalized(std::vector<double> lq);

    // Number of events summed (the mass has events()+1 components).
    int events() const { return events_; }
    std::size_t size() const { return logq_.size(); }

    double log_at(std::size_t a) const { return logq_[a]; }
    double at(std::size_t a) const;
    std::span<const double> log_values() const { return logq_; }
    std::vector<double> linear_values() const;

    bool strictly_positive() const;

private:
    MassFunction(int events, std::vector<double> lq);

    int events_;
    std::vector<double> logq_;
};

// Display convention for the mass of S_n: n+1 bins of width 1/(n+1)
// centered at abscissas a/n, with density (n+1) * q_a, so the histogram
// integrates to one.
struct DensityHistogram {
    std::vector<double> bin_centers;
    std::vector<double> densities;
    double bin_width;
};

DensityHistogram density_histogram(const MassFunction& q);

} // namespace fmd
