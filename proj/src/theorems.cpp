#include "fmd/theorems.hpp"

#include "fmd/errors.hpp"
#include "fmd/inversion.hpp"
#include "fmd/logspace.hpp"
#include "fmd/reduction.hpp"
#include "fmd/special.hpp"

#include <cmath>
#include <cstdint>
#include <string>

namespace fmd {

namespace {

long double fm_series_factor(int N) {
    // 2 [N/(N+1)] H(N)
    return 2.0L * static_cast<long double>(N) / (N + 1) * harmonic(N);
}

} // namespace

double full_fm_q1_bound(int N, double q0) {
    if (N < 1)
        throw DimensionError("full_fm_q1_bound: N must be at least 1");
    if (!(q0 >= 0.0) || !(q0 < 1.0))
        throw InvalidMassError("full_fm_q1_bound: q0 must lie in [0, 1)");
    return static_cast<double>((1.0L - static_cast<long double>(q0)) /
                               fm_series_factor(N));
}

MassFunction full_fm_mass(int N, double q0, double q1) {
    const double bound = full_fm_q1_bound(N, q0);
    if (!(q1 >= 0.0))
        throw InvalidMassError("full_fm_mass: q1 must be nonnegative");
    if (q1 > bound * (1.0 + 1e-12))
        throw BoundViolationError("full_fm_mass: q1 = " + std::to_string(q1) +
                                  " exceeds the admissible bound " +
                                  std::to_string(bound));

    long double tail = 1.0L - q0 - q1 * fm_series_factor(N);
    if (tail < 0.0L)
        tail = 0.0L;

    std::vector<double> lq(static_cast<size_t>(N) + 2, neg_inf);
    if (q0 > 0.0)
        lq[0] = std::log(q0);
    if (q1 > 0.0) {
        const double lq1 = std::log(q1);
        const double lN = std::log(static_cast<double>(N));
        for (int a = 1; a <= N; ++a)
            lq[static_cast<size_t>(a)] =
                lq1 + lN - std::log(static_cast<double>(a)) -
                std::log(static_cast<double>(N - a + 1));
    }
    if (tail > 0.0L)
        lq[static_cast<size_t>(N) + 1] =
            static_cast<double>(std::log(tail));
    return MassFunction::from_log_unnormalized(std::move(lq));
}

SumBoundCheck interior_sum_bound_check(int N, int M, double q0, double q1) {
    if (M < 1 || M > N)
        throw DimensionError("interior_sum_bound_check: M must lie in [1, N]");
    const MassFunction q = full_fm_mass(N, q0, q1);
    const MassFunction reduced = reduce_mass_to(q, M);

    CompensatedSum lhs;
    for (int a = 1; a <= M - 1; ++a)
        lhs.add(reduced.at(static_cast<size_t>(a)));

    const double rhs = std::ldexp(
        static_cast<double>(N + 2 - M) / (N + 1) * q1, M);
    return {static_cast<double>(lhs.value()), rhs};
}

std::vector<PaNAssertion> implied_reductions(const PaNAssertion& pan) {
    std::vector<PaNAssertion> out;
    out.reserve(static_cast<size_t>(pan.a2 - pan.a1));
    for (int n = pan.N - 1; n >= pan.N - (pan.a2 - pan.a1); --n)
        out.emplace_back(n, pan.a1, pan.a2 - (pan.N - n), pan.pL, pan.pU);
    return out;
}

double reduction_chain_deviation(const PaNAssertion& pan,
                                 CompletionKind kind) {
    PredictiveVector p = build_predictive(pan, kind);
    double dev = 0.0;
    for (int n = pan.N - 1; n >= pan.N - (pan.a2 - pan.a1); --n) {
        p = reduce_predictive(p);
        const int hi = pan.a2 - (pan.N - n);
        for (int a = pan.a1; a <= hi; ++a)
            dev = std::max(dev, std::fabs(p[static_cast<size_t>(a)] -
                                          static_cast<double>(a) / n));
    }
    return dev;
}

std::vector<ForcedValue> forced_extension(const PaNAssertion& pan,
                                          int a_star) {
    const std::int64_t N = pan.N;
    const std::int64_t lhs = static_cast<std::int64_t>(a_star) * N;
    if (lhs < pan.a1 * (N + 1) || lhs > pan.a2 * (N + 1))
        throw NotExtendibleError(
            "forced_extension: a_star/(N+1) = " + std::to_string(a_star) +
            "/" + std::to_string(pan.N + 1) + " lies outside [a1/N, a2/N]");

    const int T = pan.N + 1;
    const auto check = [&](int a, long double value) {
        const long double target = static_cast<long double>(a) / T;
        if (std::fabs(static_cast<double>(value - target)) > 1e-12)
            throw PrecisionError(
                "forced_extension: sweep drifted from a/(N+1) at a = " +
                std::to_string(a));
    };

    long double p = static_cast<long double>(a_star) / T;
    check(a_star, p);
    for (int a = a_star; a <= pan.a2; ++a) {
        const long double base = static_cast<long double>(a) / pan.N;
        p = 1.0L + p - p / base;
        check(a + 1, p);
    }
    p = static_cast<long double>(a_star) / T;
    for (int a = a_star; a >= pan.a1 + 1; --a) {
        const long double base = static_cast<long double>(a - 1) / pan.N;
        p = base * (1.0L - p) / (1.0L - base);
        check(a - 1, p);
    }

    std::vector<ForcedValue> out;
    out.reserve(static_cast<size_t>(pan.a2 + 1 - pan.a1 + 1));
    for (int a = pan.a1; a <= pan.a2 + 1; ++a)
        out.push_back({a, static_cast<double>(a) / T});
    return out;
}

ExtensionScenario::ExtensionScenario(PaNAssertion base_, int K_,
                                     double pL_ext_, double pU_ext_)
    : base(base_), K(K_), pL_ext(pL_ext_), pU_ext(pU_ext_) {
    if (K < 0)
        throw InvalidExtensionError("ExtensionScenario: K must be nonnegative");
    const int T = base.N + K + 1;
    if (!(pL_ext > 0.0) ||
        pL_ext > static_cast<double>(base.a1) / T)
        throw InvalidExtensionError(
            "ExtensionScenario: pL_ext must lie in (0, a1/(N+K+1)]");
    if (!(pU_ext < 1.0) ||
        pU_ext < static_cast<double>(base.a2 + K) / T)
        throw InvalidExtensionError(
            "ExtensionScenario: pU_ext must lie in [(a2+K)/(N+K+1), 1)");
}

PaNAssertion extend_assertion(const ExtensionScenario& scenario) {
    try {
        return PaNAssertion(scenario.base.N + scenario.K, scenario.base.a1,
                            scenario.base.a2 + scenario.K, scenario.pL_ext,
                            scenario.pU_ext);
    } catch (const InvalidAssertionError& e) {
        throw InvalidExtensionError(e.what());
    }
}

InteriorMassResult interior_mass(const ExtensionScenario& scenario,
                                 CompletionKind kind) {
    const PaNAssertion ext = extend_assertion(scenario);
    const PredictiveVector p = build_predictive(ext, kind);
    const MassFunction q = invert_to_mass(p);

    const int a1 = ext.a1;
    const int a2 = ext.a2;
    const int T = ext.N + 1;

    const std::span<const double> lq = q.log_values();
    const double log_direct = log_sum_exp(
        lq.subspan(static_cast<size_t>(a1), static_cast<size_t>(a2 - a1 + 1)));

    const long double bracket =
        harmonic(a2) - harmonic(a1 - 1) + harmonic(T - a1) -
        harmonic(ext.N - a2);
    const double log_closed = static_cast<double>(
        static_cast<long double>(q.log_at(static_cast<size_t>(a1))) +
        std::log(static_cast<long double>(a1)) +
        std::log(static_cast<long double>(T - a1)) -
        std::log(static_cast<long double>(T)) + std::log(bracket));

    return {std::exp(log_direct), std::exp(log_closed), log_direct,
            log_closed};
}

} // namespace fmd
