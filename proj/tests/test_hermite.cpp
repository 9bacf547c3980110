#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "gue/dominator.hpp"
#include "gue/errors.hpp"
#include "gue/hermite.hpp"
#include "gue/quadrature.hpp"
#include "gue/rng.hpp"

using namespace gue;
using doctest::Approx;

namespace {

double normal_density(double x)
{
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

}  // namespace

TEST_SUITE("hermite") {

TEST_CASE("ScaledValue normalization and arithmetic")
{
    const ScaledValue a = ScaledValue::from(6.0);
    CHECK(a.mantissa() == 1.5);
    CHECK(a.exponent() == 2);
    CHECK(ScaledValue::from(0.0).is_zero());
    CHECK((a * ScaledValue::from(-0.25)).to_double() == -1.5);
    CHECK((a + ScaledValue::from(2.0)).to_double() == 8.0);
    CHECK((a - a).is_zero());
    CHECK((a / ScaledValue::from(3.0)).to_double() == 2.0);
    CHECK_THROWS_AS(a / ScaledValue{}, DomainError);

    // Far outside double range: 2^(10^9) squared.
    const ScaledValue big = ScaledValue::from(1.0, 1'000'000'000);
    const ScaledValue sq = big * big;
    CHECK(sq.exponent() == 2'000'000'000);
    CHECK(sq.log_abs() == Approx(2e9 * std::numbers::ln2));
    CHECK(std::isinf(sq.to_double()));
}

TEST_CASE("hermite_poly small values")
{
    CHECK(hermite_poly(0, 3.7).to_double() == 1.0);
    CHECK(hermite_poly(0, -100.0).to_double() == 1.0);
    CHECK(hermite_poly(1, 3.5).to_double() == 3.5);
    CHECK(hermite_poly(2, 0.0).to_double() == -1.0);
    CHECK(hermite_poly(4, 1.0).to_double() == -2.0);
    // H_3(x) = x^3 - 3x
    CHECK(hermite_poly(3, 2.0).to_double() == Approx(2.0));
}

TEST_CASE("hermite_poly stays finite where doubles overflow")
{
    const ScaledValue h = hermite_poly(2000, 2.0 * std::sqrt(2001.0));
    CHECK(!h.is_zero());
    CHECK(std::isfinite(h.log_abs()));
    CHECK(h.log_abs() > 709.0);
}

TEST_CASE("phi_squared closed forms")
{
    for (const double x : {-3.0, -0.5, 0.0, 1.0, 2.5}) {
        CHECK(phi_squared(0, x) == Approx(normal_density(x)).epsilon(1e-14));
    }
    CHECK(phi_squared(2, 0.0) == Approx(1.0 / (2.0 * std::sqrt(2.0 * std::numbers::pi))).epsilon(1e-14));
    CHECK(phi_squared(1, 0.0) == 0.0);
    CHECK(log_phi_squared(1, 0.0) == -std::numeric_limits<double>::infinity());

    const double x = 2.0 * std::sqrt(1001.0) + 5.0;
    CHECK(phi_squared(1000, x) < 1e-10);
    CHECK(phi_squared(1000, x) > 0.0);
}

TEST_CASE("phi_squared is exactly even and nonnegative")
{
    RandomStream s(11);
    for (int i = 0; i < 2000; ++i) {
        const auto k = s.uniform_index(3000);
        const double x = (2.0 * s.uniform() - 1.0) * (2.0 * std::sqrt(k + 1.0) + 5.0);
        const double v = phi_squared(k, x);
        REQUIRE(v >= 0.0);
        REQUIRE(v == phi_squared(k, -x));
    }
}

TEST_CASE("table evaluator is bit-identical to the free function")
{
    const PhiSquaredEvaluator eval(5000);
    RandomStream s(12);
    for (int i = 0; i < 500; ++i) {
        const auto k = s.uniform_index(5001);
        const double x = (2.0 * s.uniform() - 1.0) * 150.0;
        REQUIRE(eval.phi_sq(k, x) == phi_squared(k, x));
    }
    CHECK_THROWS_AS(eval.phi_sq(5001, 0.0), ParameterError);
}

TEST_CASE("normalized recurrence agrees with the raw polynomial")
{
    // log phi_k = log|H_k| - x^2/4 - (log k! + log sqrt(2 pi)) / 2
    RandomStream s(13);
    int compared = 0;
    for (int i = 0; i < 3000; ++i) {
        const auto k = s.uniform_index(301);
        const double x = (2.0 * s.uniform() - 1.0) * (2.0 * std::sqrt(k + 1.0) + 3.0);
        const double log_phi_raw = hermite_poly(k, x).log_abs() - 0.25 * x * x
                                   - 0.5 * (std::lgamma(k + 1.0)
                                            + 0.5 * std::log(2.0 * std::numbers::pi));
        const double log_phi = 0.5 * log_phi_squared(k, x);
        // Skip the immediate neighbourhood of a zero, where both lose digits.
        const double envelope_level = k > 0 ? 0.5 * std::log(envelope(make_dominator(k), x)) : 0.0;
        if (log_phi < envelope_level - 7.0 && std::abs(x) < 2.0 * std::sqrt(k + 1.0)) {
            continue;
        }
        ++compared;
        // 10 significant digits of phi.
        REQUIRE(std::abs(std::exp(log_phi_raw - log_phi) - 1.0) < 1e-10);
    }
    CHECK(compared > 2500);
}

TEST_CASE("phi_squared under the envelope h_k on dense grids")
{
    for (const std::uint64_t k : {1, 2, 3, 5, 10, 50, 100, 1000, 10000}) {
        const DominatorSpec spec = make_dominator(k);
        const double reach = 2.0 * std::sqrt(k + 1.0) + 3.0;
        const PhiSquaredEvaluator eval(k);
        for (int i = 0; i <= 10000; ++i) {
            const double x = -reach + 2.0 * reach * i / 10000.0;
            const double v = eval.phi_sq(k, x);
            const double h = envelope(spec, x);
            REQUIRE(v >= 0.0);
            REQUIRE(v <= h + 1e-12 * std::max(1.0, h));
        }
    }
}

TEST_CASE("phi_sq_cdf values")
{
    CHECK(phi_sq_cdf(0, 1.0, 1e-10) == Approx(0.8413447460685429).epsilon(1e-9));
    CHECK(phi_sq_cdf(0, -1.0, 1e-10) == Approx(1.0 - 0.8413447460685429).epsilon(1e-9));
    for (const std::uint64_t k : {0, 1, 5, 50, 500}) {
        CHECK(phi_sq_cdf(k, 0.0, 1e-10) == 0.5);
        const double upper = hermite_tail_cutoff(k);
        CHECK(std::abs(phi_sq_cdf(k, upper, 1e-10) - 1.0) < 1e-9);
        CHECK(phi_sq_cdf(k, std::numeric_limits<double>::infinity(), 1e-10) == Approx(1.0).epsilon(1e-9));
        CHECK(phi_squared(k, upper) < 1e-30);
    }
    CHECK_THROWS_AS(phi_sq_cdf(3, 1.0, 0.0), ParameterError);
}

TEST_CASE("phi_sq_cdf reports a convergence failure")
{
    // A budget of one interval per panel cannot reach 1e-300.
    CHECK_THROWS_AS(integrate_adaptive([](double t) { return std::sin(40.0 * t); }, 0.0, 3.0,
                                       1e-300, 1, 50),
                    ConvergenceError);
}

TEST_CASE("tabulated CDF matches the direct adaptive CDF")
{
    for (const std::uint64_t k : {1, 7, 120}) {
        const PhiSqCdfTable table(k, 1e-10);
        CHECK(table.half_mass() == Approx(0.5).epsilon(1e-9));
        for (const double x : {-9.0, -2.0, -0.3, 0.0, 0.7, 3.1, 12.0, 40.0}) {
            CHECK(std::abs(table(x) - phi_sq_cdf(k, x, 1e-10)) < 1e-9);
        }
    }
}

TEST_CASE("mixture density")
{
    for (const double x : {-2.0, 0.0, 0.4}) {
        CHECK(mixture_density(1, x) == Approx(normal_density(x)).epsilon(1e-14));
    }
    CHECK(mixture_density(2, 0.0) == Approx(0.5 / std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-14));
    CHECK(mixture_density(2, 0.0) == Approx(0.19947114020071635).epsilon(1e-12));

    // Direct sum of the component densities.
    for (const double x : {-5.0, 0.3, 7.9}) {
        double sum = 0.0;
        for (std::uint64_t k = 0; k < 40; ++k) {
            sum += phi_squared(k, x);
        }
        CHECK(mixture_density(40, x) == Approx(sum / 40.0).epsilon(1e-12));
    }

    // Large n, far from the origin: the partial sums pass 2^512.
    for (const double x : {55.0, 67.5, 77.5}) {
        double sum = 0.0;
        for (std::uint64_t k = 0; k < 1000; ++k) {
            sum += phi_squared(k, x);
        }
        const double m = mixture_density(1000, x);
        CHECK(std::isfinite(m));
        CHECK(m == Approx(sum / 1000.0).epsilon(1e-10));
    }

    // Second moment equals n (quadrature oracle).
    for (const std::uint64_t n : {1, 2, 5, 20}) {
        const double reach = hermite_tail_cutoff(n);
        const auto mass = integrate_adaptive([&](double x) { return mixture_density(n, x); },
                                             -reach, reach, 1e-11, 64);
        const auto moment = integrate_adaptive(
            [&](double x) { return x * x * mixture_density(n, x); }, -reach, reach, 1e-10, 64);
        CHECK(mass.value == Approx(1.0).epsilon(1e-9));
        CHECK(moment.value == Approx(double(n)).epsilon(1e-9));
    }
    CHECK_THROWS_AS(mixture_density(0, 1.0), ParameterError);
}

TEST_CASE("phi_squared handles large indices")
{
    const std::uint64_t k = 1'000'000;
    const double edge = 2.0 * std::sqrt(k + 1.0);
    for (const double x : {0.0, 0.5 * edge, 0.99 * edge, edge + 1.0}) {
        const double v = phi_squared(k, x);
        CHECK(std::isfinite(v));
        CHECK(v >= 0.0);
        CHECK(v <= envelope(make_dominator(k), x));
    }
}

}
