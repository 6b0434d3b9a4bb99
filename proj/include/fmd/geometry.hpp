#pragma once

namespace fmd {

// A conditional probability P(E_{N+1}|S_N = a) = p drawn as a line in the
// (alpha, beta) plane: anchored at (-a, -(N-a)) with slope (1-p)/p, so
// beta = -(N-a) + (alpha + a) (1-p)/p.
struct ConditionalLine {
    int a;
    int N;
    double p;

    double anchor_alpha() const { return -static_cast<double>(a); }
    double anchor_beta() const { return -static_cast<double>(N - a); }
    double slope() const { return (1.0 - p) / p; }
    double beta_at(double alpha) const {
        return anchor_beta() + (alpha + a) * slope();
    }
    // True when p is the frequency-mimicking ratio a/N bit for bit, which
    // lets intersections be solved in integer rationals.
    bool exact_fm() const;
};

ConditionalLine line_for_conditional(int a, int N, double p);

struct ConcurrencyResult {
    bool parallel; // equal slopes; alpha/beta are then meaningless
    double alpha;
    double beta;
    bool exact; // solved in integer arithmetic
};

// Checks that the lines for p_{a,N}, p_{a+1,N} and the one-step-reduced
// p_{a,N-1} meet in a single point (or are mutually parallel in the
// constant-p case) and returns that point.  The triple must satisfy the
// one-step predictive reduction identity.
ConcurrencyResult concurrency_check(const ConditionalLine& lower,
                                    const ConditionalLine& upper,
                                    const ConditionalLine& reduced);

} // namespace fmd
