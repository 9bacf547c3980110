#include <cmath>
#include <numbers>

#include "doctest.h"
#include "gue/errors.hpp"
#include "gue/hermite.hpp"
#include "gue/quadrature.hpp"
#include "gue/vanveen.hpp"

using namespace gue;
using doctest::Approx;
using std::numbers::pi;

TEST_SUITE("vanveen") {

TEST_CASE("terms at the origin")
{
    for (const std::uint64_t n : {1, 10, 999}) {
        const VanVeenTerms t = evaluate_vanveen(n, 0.0);
        CHECK(t.alpha == Approx(pi / 2).epsilon(1e-15));
        CHECK(t.R_term == Approx(1.0 / (3.0 * (n + 1.0))).epsilon(1e-14));
        CHECK(t.eps_plus >= 0.0);
        CHECK(t.eps_minus >= 0.0);
    }
}

TEST_CASE("domain guard at the turning point")
{
    const double edge = 2.0 * std::sqrt(11.0);
    CHECK_THROWS_AS(evaluate_vanveen(10, edge), DomainError);
    CHECK_THROWS_AS(evaluate_vanveen(10, -edge), DomainError);
    CHECK_THROWS_AS(evaluate_vanveen(10, edge * (1 - 1e-13)), DomainError);
    CHECK_NOTHROW(evaluate_vanveen(10, edge * (1 - 1e-9)));
    CHECK_THROWS_AS(evaluate_vanveen(0, 0.1), ParameterError);
    CHECK(vanveen_approximation(10, edge + 0.1) == 0.0);
}

TEST_CASE("terms are even in x")
{
    const VanVeenTerms a = evaluate_vanveen(37, 4.1);
    const VanVeenTerms b = evaluate_vanveen(37, -4.1);
    CHECK(a.f == b.f);
    CHECK(a.eps_plus == b.eps_plus);
    CHECK(a.eps_minus == b.eps_minus);
}

TEST_CASE("log prefactor matches the term-by-term definition")
{
    for (std::uint64_t n = 1; n <= 150; n += 7) {
        double log_factorial = 0.0;
        for (std::uint64_t j = 2; j <= n; ++j) {
            log_factorial += std::log(double(j));
        }
        for (const double frac : {0.0, 0.3, 0.8}) {
            const double x = frac * 2.0 * std::sqrt(n + 1.0);
            const double log_A = log_factorial - std::log(pi) + (n + 1.0) / 2.0 + x * x / 4.0
                                 - (n / 2.0) * std::log(n + 1.0);
            const double expected = 2.0 * log_A - x * x / 2.0
                                    - std::log(std::sqrt(2.0 * pi)) - log_factorial;
            CHECK(std::abs(evaluate_vanveen(n, x).log_prefactor - expected) < 1e-9);
        }
    }
}

TEST_CASE("f_n approximates phi_n^2 in the bulk")
{
    // Not a bound check: the leading term alone should be close at large n.
    const std::uint64_t n = 2000;
    for (const double x : {0.0, 10.0, 40.0}) {
        const VanVeenTerms t = evaluate_vanveen(n, x);
        CHECK(std::abs(t.f - phi_squared(n, x)) <= t.eps_plus + t.eps_minus);
        CHECK(t.eps_plus + t.eps_minus < 0.05 * envelope(make_dominator(n), x));
    }
}

TEST_CASE("squeeze bounds sandwich phi_n^2 for n = 10 (2000 points)")
{
    const DominatorSpec s = make_dominator(10);
    for (int i = 0; i <= 2000; ++i) {
        const double x = s.x1 * i / 2000.0;
        const VanVeenTerms t = evaluate_vanveen(10, x);
        const double exact = phi_squared(10, x);
        const double slack = 1e-10 * envelope(s, x);
        REQUIRE(t.lower() <= exact + slack);
        REQUIRE(exact <= t.upper() + slack);
    }
}

TEST_CASE("squeeze validity on 1e4-point grids")
{
    for (const std::uint64_t n : {5, 10, 50, 200, 1000}) {
        const DominatorSpec s = make_dominator(n);
        const PhiSquaredEvaluator eval(n);
        for (int i = 0; i <= 10000; ++i) {
            const double x = -s.x1 + 2.0 * s.x1 * i / 10000.0;
            const SqueezeBounds b = squeeze_bounds(s, x);
            const double exact = eval.phi_sq(n, x);
            const double slack = 1e-10 * envelope(s, x);
            REQUIRE(b.lower <= exact + slack);
            REQUIRE(exact <= b.upper + slack);
            REQUIRE(delta_eps(s, x) >= 0.0);
        }
    }
}

TEST_CASE("gap integral is finite and shrinks with n")
{
    const auto gap_integral = [](std::uint64_t n) {
        const DominatorSpec s = make_dominator(n);
        return integrate_adaptive([&](double x) { return delta_eps(s, x); }, 0.0, s.x1, 1e-7,
                                  2000)
            .value;
    };
    const double i100 = gap_integral(100);
    const double i1000 = gap_integral(1000);
    CHECK(std::isfinite(i100));
    CHECK(i100 > 0.0);
    CHECK(i1000 < i100);
    CHECK(delta_eps(100, 3.0) == delta_eps(make_dominator(100), 3.0));
}

}
