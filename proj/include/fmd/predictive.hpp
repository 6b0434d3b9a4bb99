#pragma once

#include <span>
#include <vector>

namespace fmd {

// Conditional probabilities P(E_{N+1} | S_N = a) for a = 0..N.  Entries
// live in the open interval (0, 1): asserting 0 or 1 conditionally would
// collapse the mass inversion's standard case.
class PredictiveVector {
public:
    PredictiveVector(int n, std::vector<double> values);

    // Number of conditioning events N.
    int conditioning_events() const { return n_; }

    std::size_t size() const { return v_.size(); }
    double operator[](std::size_t a) const { return v_[a]; }
    std::span<const double> values() const { return v_; }

    bool nondecreasing() const;

private:
    int n_;
    std::vector<double> v_;
};

} // namespace fmd
