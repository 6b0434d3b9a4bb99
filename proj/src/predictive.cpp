#include "fmd/predictive.hpp"

#include "fmd/errors.hpp"

#include <string>

namespace fmd {

PredictiveVector::PredictiveVector(int n, std::vector<double> values)
    : n_(n), v_(std::move(values)) {
    if (n_ < 0) throw InvalidPredictiveError("PredictiveVector: N must be nonnegative");
    if (v_.size() != static_cast<std::size_t>(n_) + 1)
        throw DimensionError("PredictiveVector: need N+1 entries, got " +
                             std::to_string(v_.size()));
    for (std::size_t a = 0; a < v_.size(); ++a) {
        const double p = v_[a];
        if (!(p > 0.0) || !(p < 1.0))
            throw InvalidPredictiveError(
                "PredictiveVector: entry " + std::to_string(a) +
                " must lie strictly inside (0, 1)");
    }
}

bool PredictiveVector::nondecreasing() const {
    for (std::size_t a = 1; a < v_.size(); ++a)
        if (v_[a] < v_[a - 1]) return false;
    return true;
}

} // namespace fmd
