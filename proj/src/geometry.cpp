#include "fmd/geometry.hpp"

#include "fmd/errors.hpp"

#include <cmath>
#include <cstdint>
#include <string>

namespace fmd {

bool ConditionalLine::exact_fm() const {
    return a >= 1 && a <= N - 1 &&
           p == static_cast<double>(a) / static_cast<double>(N);
}

ConditionalLine line_for_conditional(int a, int N, double p) {
    if (N < 1)
        throw DimensionError("line_for_conditional: N must be positive");
    if (a < 0 || a > N)
        throw DimensionError("line_for_conditional: a must lie in [0, N]");
    if (!(p > 0.0) || !(p < 1.0))
        throw InvalidPredictiveError(
            "line_for_conditional: p must lie strictly inside (0, 1)");
    return {a, N, p};
}

namespace {

struct RationalSlope {
    std::int64_t num; // N - a
    std::int64_t den; // a
};

// Line in the integer form num*alpha - den*beta = rhs.
struct IntegerLine {
    std::int64_t num;
    std::int64_t den;
    std::int64_t rhs;
};

IntegerLine integer_line(const ConditionalLine& l) {
    const RationalSlope s{static_cast<std::int64_t>(l.N - l.a),
                          static_cast<std::int64_t>(l.a)};
    return {s.num, s.den,
            static_cast<std::int64_t>(l.N - l.a) * s.den -
                static_cast<std::int64_t>(l.a) * s.num};
}

ConcurrencyResult exact_concurrency(const ConditionalLine& l1,
                                    const ConditionalLine& l2,
                                    const ConditionalLine& l3) {
    const IntegerLine i1 = integer_line(l1);
    const IntegerLine i2 = integer_line(l2);
    const IntegerLine i3 = integer_line(l3);

    const std::int64_t det = i1.den * i2.num - i1.num * i2.den;
    if (det == 0) {
        if (i1.num * i3.den != i3.num * i1.den)
            throw NonCoherentTripleError(
                "concurrency_check: parallel pair with a non-parallel third "
                "line");
        return {true, 0.0, 0.0, true};
    }

    const std::int64_t alpha_num = i1.den * i2.rhs - i2.den * i1.rhs;
    const std::int64_t beta_num = i1.num * i2.rhs - i2.num * i1.rhs;
    const __int128 lhs3 = static_cast<__int128>(i3.num) * alpha_num -
                          static_cast<__int128>(i3.den) * beta_num;
    const __int128 rhs3 = static_cast<__int128>(i3.rhs) * det;
    if (lhs3 != rhs3)
        throw NonCoherentTripleError(
            "concurrency_check: third line misses the pairwise intersection");

    return {false, static_cast<double>(alpha_num) / static_cast<double>(det),
            static_cast<double>(beta_num) / static_cast<double>(det), true};
}

} // namespace

ConcurrencyResult concurrency_check(const ConditionalLine& lower,
                                    const ConditionalLine& upper,
                                    const ConditionalLine& reduced) {
    if (upper.N != lower.N || upper.a != lower.a + 1 ||
        reduced.N != lower.N - 1 || reduced.a != lower.a)
        throw DimensionError(
            "concurrency_check: lines must carry (a,N), (a+1,N), (a,N-1)");

    const double implied = lower.p / (1.0 - upper.p + lower.p);
    if (std::fabs(reduced.p - implied) > 1e-12)
        throw NonCoherentTripleError(
            "concurrency_check: reduced p deviates from p/(1 - p' + p) by " +
            std::to_string(std::fabs(reduced.p - implied)));

    if (lower.exact_fm() && upper.exact_fm() && reduced.exact_fm())
        return exact_concurrency(lower, upper, reduced);

    const double s1 = lower.slope();
    const double s2 = upper.slope();
    const double s3 = reduced.slope();
    if (std::fabs(s1 - s2) <= 1e-12 * std::max(std::fabs(s1), std::fabs(s2))) {
        if (std::fabs(s3 - s1) >
            1e-10 * std::max(1.0, std::fabs(s1)))
            throw NonCoherentTripleError(
                "concurrency_check: parallel pair with a non-parallel third "
                "line");
        return {true, 0.0, 0.0, false};
    }

    const double alpha =
        (static_cast<double>(lower.N - lower.a) -
         static_cast<double>(upper.N - upper.a) + upper.a * s2 -
         lower.a * s1) /
        (s1 - s2);
    const double beta = lower.beta_at(alpha);
    const double miss = std::fabs(reduced.beta_at(alpha) - beta);
    if (miss > 1e-10 * std::max(1.0, std::fabs(beta)))
        throw NonCoherentTripleError(
            "concurrency_check: third line misses the intersection by " +
            std::to_string(miss));
    return {false, alpha, beta, false};
}

} // namespace fmd
