#include "doctest.h"

#include "fmd/errors.hpp"
#include "fmd/inversion.hpp"
#include "fmd/logspace.hpp"
#include "fmd/mass.hpp"
#include "fmd/predictive.hpp"
#include "fmd/quadrature.hpp"
#include "fmd/reduction.hpp"
#include "fmd/special.hpp"

#include <cmath>
#include <random>
#include <vector>

using namespace fmd;

namespace {

std::vector<double> random_mass(std::mt19937& rng, int components) {
    std::uniform_real_distribution<double> u(0.05, 1.0);
    std::vector<double> q(components);
    double sum = 0.0;
    for (double& v : q) {
        v = u(rng);
        sum += v;
    }
    for (double& v : q) v /= sum;
    return q;
}

std::vector<double> random_predictive(std::mt19937& rng, int n) {
    std::uniform_real_distribution<double> u(0.02, 0.98);
    std::vector<double> p(n + 1);
    for (double& v : p) v = u(rng);
    return p;
}

} // namespace

TEST_CASE("harmonic numbers") {
    CHECK(harmonic(0) == 0.0);
    CHECK(harmonic(1) == 1.0);
    CHECK(harmonic(4) == doctest::Approx(25.0 / 12.0).epsilon(1e-15));
    CHECK(harmonic(10) == doctest::Approx(2.928968253968253968).epsilon(1e-15));
    CHECK_THROWS_AS(harmonic(-1), ValidationError);
}

TEST_CASE("log binomials") {
    CHECK(log_choose(5, 2) == doctest::Approx(std::log(10.0)).epsilon(1e-15));
    CHECK(log_factorial(0) == 0.0);
    CHECK(log_factorial(5) == doctest::Approx(std::log(120.0)).epsilon(1e-15));
    CHECK_THROWS_AS(log_choose(3, 5), ValidationError);

    LogFactorials lf(100000);
    CHECK(static_cast<double>(lf(0)) == 0.0);
    CHECK(static_cast<double>(lf.choose(5, 2)) ==
          doctest::Approx(std::log(10.0)).epsilon(1e-16));
    // differences of the prefix table stay accurate at the top end
    CHECK(static_cast<double>(lf(100000) - lf(99999)) ==
          doctest::Approx(std::log(100000.0)).epsilon(1e-14));
    CHECK(static_cast<double>(lf.choose(100000, 3)) ==
          doctest::Approx(log_choose(100000, 3)).epsilon(1e-13));
}

TEST_CASE("log-space primitives") {
    CHECK(log_add(std::log(2.0), std::log(3.0)) ==
          doctest::Approx(std::log(5.0)).epsilon(1e-15));
    CHECK(log_add(neg_inf, std::log(3.0)) ==
          doctest::Approx(std::log(3.0)).epsilon(1e-15));
    CHECK(log_add(neg_inf, neg_inf) == neg_inf);

    std::vector<double> v{std::log(1.0), std::log(2.0), std::log(3.0)};
    CHECK(log_sum_exp(v) == doctest::Approx(std::log(6.0)).epsilon(1e-15));
    std::vector<double> allz{neg_inf, neg_inf};
    CHECK(log_sum_exp(allz) == neg_inf);
    std::vector<double> shifted{-1000.0, -1000.0};
    CHECK(log_sum_exp(shifted) ==
          doctest::Approx(-1000.0 + std::log(2.0)).epsilon(1e-15));

    CompensatedSum s;
    for (int i = 0; i < 10; ++i) s.add(0.1L);
    CHECK(static_cast<double>(s.value()) == doctest::Approx(1.0).epsilon(1e-18));
}

TEST_CASE("regularized incomplete beta") {
    CHECK(ibeta_reg(1, 4, 0.3) ==
          doctest::Approx(1.0 - std::pow(0.7, 4)).epsilon(1e-14));
    CHECK(ibeta_reg(6, 1, 0.8) ==
          doctest::Approx(std::pow(0.8, 6)).epsilon(1e-14));
    CHECK(ibeta_reg(3, 7, 0.45) ==
          doctest::Approx(0.850496859984375).epsilon(1e-14));
    CHECK(ibeta_reg(12, 4, 0.8) ==
          doctest::Approx(0.648162104573952).epsilon(1e-13));
    CHECK(ibeta_reg(500, 500, 0.2) ==
          doctest::Approx(2.5814877946988061e-99).epsilon(1e-12));
    CHECK(ibeta_reg(2.5, 3.5, 0.0) == 0.0);
    CHECK(ibeta_reg(2.5, 3.5, 1.0) == 1.0);
    // reflection identity
    CHECK(ibeta_reg(3.5, 2.25, 0.3) ==
          doctest::Approx(1.0 - ibeta_reg(2.25, 3.5, 0.7)).epsilon(1e-13));
    CHECK_THROWS_AS(ibeta_reg(0.0, 1.0, 0.5), ValidationError);
}

TEST_CASE("incomplete beta differences avoid tail cancellation") {
    CHECK(ibeta_reg_diff(5, 5, 0.3, 0.7) ==
          doctest::Approx(0.80238268).epsilon(1e-12));
    // both abscissas deep in the lower tail: answer is 1e-91, while the
    // naive 1 - upper route would return garbage near machine epsilon
    CHECK(ibeta_reg_diff(500, 500, 0.2, 0.21) ==
          doctest::Approx(1.9485489729286551e-91).epsilon(1e-11));
    // both in the upper tail
    CHECK(ibeta_reg_diff(40, 2, 0.9, 0.99) ==
          doctest::Approx(0.86265604729037976).epsilon(1e-12));
    CHECK(ibeta_reg_diff(3, 3, 0.4, 0.4) == doctest::Approx(0.0));
    CHECK_THROWS_AS(ibeta_reg_diff(3, 3, 0.7, 0.3), ValidationError);
}

TEST_CASE("log-domain quadrature") {
    // kernel t (1-t)^2 over (.1,.9) integrates to 59/750
    const auto g1 = [](double t) {
        return std::log(t) + 2.0 * std::log1p(-t);
    };
    CHECK(log_integrate_exp(g1, 0.1, 0.9) ==
          doctest::Approx(-2.542535762624637).epsilon(1e-13));
    // 1/theta over (.2,.6) integrates to ln 3
    const auto g2 = [](double t) { return -std::log(t); };
    CHECK(std::exp(log_integrate_exp(g2, 0.2, 0.6)) ==
          doctest::Approx(std::log(3.0)).epsilon(1e-13));
    // integrand scaled by exp(-5000): the shift must absorb it
    const auto g3 = [](double x) {
        return -5000.0 - (x - 0.5) * (x - 0.5) * 1e4;
    };
    CHECK(log_integrate_exp(g3, 0.0, 1.0) ==
          doctest::Approx(-5000.0 + std::log(std::sqrt(3.14159265358979324e-4)))
              .epsilon(1e-10));
}

TEST_CASE("predictive vector validation") {
    CHECK_NOTHROW(PredictiveVector(2, {0.2, 0.5, 0.8}));
    CHECK_THROWS_AS(PredictiveVector(2, {0.2, 0.5}), DimensionError);
    CHECK_THROWS_AS(PredictiveVector(2, {0.0, 0.5, 0.8}),
                    InvalidPredictiveError);
    CHECK_THROWS_AS(PredictiveVector(2, {0.2, 0.5, 1.0}),
                    InvalidPredictiveError);

    PredictiveVector p(2, {0.2, 0.5, 0.8});
    CHECK(p.conditioning_events() == 2);
    CHECK(p.size() == 3);
    CHECK(p.nondecreasing());
    CHECK_FALSE(PredictiveVector(1, {0.6, 0.5}).nondecreasing());
}

TEST_CASE("mass function construction") {
    MassFunction q = MassFunction::from_linear({0.25, 0.5, 0.25});
    CHECK(q.events() == 2);
    CHECK(q.size() == 3);
    CHECK(q.at(1) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(q.strictly_positive());

    // tolerant renormalization
    MassFunction r = MassFunction::from_linear({0.25 + 4e-10, 0.5, 0.25});
    CHECK(r.at(0) + r.at(1) + r.at(2) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(MassFunction::from_linear({0.3, 0.5, 0.25}),
                    InvalidMassError);
    CHECK_THROWS_AS(MassFunction::from_linear({-0.1, 0.6, 0.5}),
                    InvalidMassError);
    CHECK_THROWS_AS(MassFunction::from_linear({1.0}), DimensionError);

    MassFunction z = MassFunction::from_linear({0.5, 0.0, 0.5});
    CHECK_FALSE(z.strictly_positive());
    CHECK(z.log_at(1) == neg_inf);
    CHECK(z.at(1) == 0.0);

    std::vector<double> lq{-1.0, neg_inf, -2.0};
    MassFunction w = MassFunction::from_log_unnormalized(std::move(lq));
    CHECK(w.at(1) == 0.0);
    CHECK(w.at(0) + w.at(2) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("density histogram convention") {
    MassFunction q = MassFunction::from_linear({0.1, 0.2, 0.3, 0.4});
    DensityHistogram h = density_histogram(q);
    CHECK(h.bin_width == doctest::Approx(0.25).epsilon(1e-16));
    CHECK(h.bin_centers[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-16));
    CHECK(h.densities[2] == doctest::Approx(4.0 * 0.3).epsilon(1e-15));
    double total = 0.0;
    for (double d : h.densities) total += d * h.bin_width;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("inversion against the product-form values") {
    // p = (.1,.3,.5,.7,.9) gives q = (63,35,30,30,35,63)/256
    PredictiveVector p(4, {0.1, 0.3, 0.5, 0.7, 0.9});
    MassFunction q = invert_to_mass(p);
    REQUIRE(q.size() == 6);
    CHECK(q.at(0) == doctest::Approx(63.0 / 256.0).epsilon(1e-14));
    CHECK(q.at(1) == doctest::Approx(35.0 / 256.0).epsilon(1e-14));
    CHECK(q.at(2) == doctest::Approx(30.0 / 256.0).epsilon(1e-14));
    CHECK(q.at(3) == doctest::Approx(30.0 / 256.0).epsilon(1e-14));
    CHECK(q.at(5) == doctest::Approx(63.0 / 256.0).epsilon(1e-14));
}

TEST_CASE("uniform mass pairs with p = (1/3, 2/3)") {
    MassFunction u = MassFunction::from_linear({1.0 / 3, 1.0 / 3, 1.0 / 3});
    PredictiveVector p = mass_to_predictive(u);
    CHECK(p[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(p[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));

    MassFunction back = invert_to_mass(PredictiveVector(1, {1.0 / 3, 2.0 / 3}));
    CHECK(back.at(0) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(back.at(2) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("constant predictive collapses to the binomial") {
    const double pc = 0.3;
    PredictiveVector p(6, std::vector<double>(7, pc));
    MassFunction q = invert_to_mass(p);
    for (int a = 0; a <= 7; ++a) {
        const double expect = std::exp(log_choose(7, a) + a * std::log(pc) +
                                       (7 - a) * std::log1p(-pc));
        CHECK(q.at(a) == doctest::Approx(expect).epsilon(1e-13));
    }
}

TEST_CASE("mass to predictive requires strict positivity") {
    MassFunction z = MassFunction::from_linear({0.5, 0.0, 0.5});
    CHECK_THROWS_AS(mass_to_predictive(z), DegenerateCaseError);
}

TEST_CASE("round trips stay under 1e-10") {
    std::mt19937 rng(20240817);
    for (int events : {11, 102}) {
        for (int rep = 0; rep < 20; ++rep) {
            MassFunction q =
                MassFunction::from_linear(random_mass(rng, events + 1));
            CHECK(roundtrip_check(q) < 1e-10);
        }
    }
}

TEST_CASE("one-step reduction reproduces the fixed table") {
    MassFunction q6 = MassFunction::from_linear(
        {0.05, 0.10, 0.20, 0.25, 0.18, 0.12, 0.10});
    MassFunction q = q6;
    while (q.events() > 3) q = reduce_mass_one(q);
    CHECK(q.at(0) == doctest::Approx(0.1525).epsilon(1e-14));
    CHECK(q.at(1) == doctest::Approx(0.3185).epsilon(1e-14));
    CHECK(q.at(2) == doctest::Approx(0.3205).epsilon(1e-14));
    CHECK(q.at(3) == doctest::Approx(0.2085).epsilon(1e-14));

    SUBCASE("direct hypergeometric route agrees") {
        MassFunction r = reduce_mass_to(q6, 3);
        for (int a = 0; a <= 3; ++a)
            CHECK(r.at(a) == doctest::Approx(q.at(a)).epsilon(1e-14));
    }
}

TEST_CASE("stepwise and direct reductions agree to 1e-14") {
    std::mt19937 rng(7);
    MassFunction q = MassFunction::from_linear(random_mass(rng, 61));
    MassFunction step = q;
    while (step.events() > 25) step = reduce_mass_one(step);
    MassFunction direct = reduce_mass_to(q, 25);
    for (int a = 0; a <= 25; ++a)
        CHECK(std::fabs(direct.at(a) - step.at(a)) < 1e-14);
}

TEST_CASE("reduction handles zero components") {
    MassFunction q = MassFunction::from_linear({0.5, 0.0, 0.0, 0.5});
    MassFunction r = reduce_mass_one(q);
    CHECK(r.at(0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(r.at(1) == 0.0);
    CHECK(r.log_at(1) == neg_inf);
    CHECK(r.at(2) == doctest::Approx(0.5).epsilon(1e-15));
    MassFunction r2 = reduce_mass_to(q, 1);
    CHECK(r2.at(0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(r2.at(1) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("predictive reduction fixed values") {
    PredictiveVector p(2, {0.2, 0.4, 0.7});
    PredictiveVector r = reduce_predictive(p);
    CHECK(r.conditioning_events() == 1);
    CHECK(r[0] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(r[1] == doctest::Approx(4.0 / 7.0).epsilon(1e-15));
}

TEST_CASE("reduction commutes with the predictive map") {
    std::mt19937 rng(99);
    PredictiveVector p(8, random_predictive(rng, 8));
    MassFunction q = invert_to_mass(p);

    PredictiveVector lhs = mass_to_predictive(reduce_mass_one(q));
    PredictiveVector rhs = reduce_predictive(mass_to_predictive(q));
    REQUIRE(lhs.size() == rhs.size());
    for (size_t a = 0; a < lhs.size(); ++a)
        CHECK(lhs[a] == doctest::Approx(rhs[a]).epsilon(1e-12));
}

TEST_CASE("reduce_mass_to rejects bad targets") {
    MassFunction q = MassFunction::from_linear({0.25, 0.5, 0.25});
    CHECK_THROWS_AS(reduce_mass_to(q, 0), DimensionError);
    CHECK_THROWS_AS(reduce_mass_to(q, 3), DimensionError);
    CHECK(reduce_mass_to(q, 2).at(1) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(reduce_mass_one(MassFunction::from_linear({0.5, 0.5})),
                    DimensionError);
}
