#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "doctest.h"
#include "gue/errors.hpp"
#include "gue/rng.hpp"
#include "gue/stats.hpp"

using namespace gue;
using doctest::Approx;

TEST_SUITE("stats") {

TEST_CASE("Kolmogorov critical values")
{
    CHECK(kolmogorov_critical(0.05) == Approx(1.3581).epsilon(1e-4));
    CHECK(kolmogorov_critical(0.01) == Approx(1.6276).epsilon(1e-4));
    CHECK(kolmogorov_critical(0.001) == Approx(1.9495).epsilon(1e-4));
    CHECK(kolmogorov_survival(0.0) == 1.0);
    CHECK(kolmogorov_survival(5.0) < 1e-20);
}

TEST_CASE("one-sample KS")
{
    RandomStream s(400);
    std::vector<double> u(100000);
    for (auto& v : u) {
        v = s.uniform();
    }
    const auto uniform_cdf = [](double x) { return std::clamp(x, 0.0, 1.0); };
    const KSResult r = ks_one_sample(u, uniform_cdf);
    CHECK(r.scaled < 1.95);
    CHECK(r.n_effective == 1e5);
    CHECK(r.pass_at.at(0.001));
    CHECK(r.scaled == Approx(r.statistic * std::sqrt(1e5)));

    const std::vector<double> constant(200, 0.5);
    const auto normal_cdf = [](double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); };
    CHECK(ks_one_sample(constant, [](double) { return 0.5; }).statistic == Approx(0.5));
    std::vector<double> far(200, 40.0);
    CHECK(ks_one_sample(far, normal_cdf).statistic == Approx(1.0));

    // Below the sample minimum the gap is F itself.
    std::vector<double> high(200, 0.9);
    CHECK(ks_one_sample(high, uniform_cdf).statistic == Approx(0.9));

    CHECK_THROWS_AS(ks_one_sample(std::vector<double>(50, 0.1), uniform_cdf), ParameterError);
    CHECK_THROWS_AS(ks_one_sample(u, [](double x) { return 1.0 - std::clamp(x, 0.0, 1.0); }),
                    OracleError);
    CHECK_THROWS_AS(ks_one_sample(u, [](double) { return 1.5; }), OracleError);
}

TEST_CASE("two-sample KS")
{
    RandomStream s(401);
    std::vector<double> a(100000);
    std::vector<double> b(100000);
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] = s.standard_normal();
        b[i] = s.standard_normal();
    }
    CHECK(ks_two_sample(a, a).statistic == 0.0);
    const KSResult same = ks_two_sample(a, b);
    CHECK(same.passes(0.01));
    CHECK(same.n_effective == Approx(5e4));

    std::vector<double> c(10000);
    std::vector<double> d(10000);
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = s.standard_normal();
        d[i] = 1.0 + s.standard_normal();
    }
    CHECK_FALSE(ks_two_sample(c, d).passes(0.01));

    // Ties across samples are stepped together.
    std::vector<double> t1(100, 1.0);
    std::vector<double> t2(100, 1.0);
    CHECK(ks_two_sample(t1, t2).statistic == 0.0);
}

TEST_CASE("log-log slope")
{
    std::vector<std::pair<double, double>> linear;
    std::vector<std::pair<double, double>> cube_root;
    for (const double n : {10.0, 100.0, 1000.0, 1e4}) {
        linear.emplace_back(n, n);
        cube_root.emplace_back(n, 3.7 * std::pow(n, -1.0 / 3.0));
    }
    CHECK(std::abs(loglog_slope(linear).slope - 1.0) < 1e-12);
    CHECK(loglog_slope(linear).stderr_slope < 1e-12);
    CHECK(loglog_slope(cube_root).slope == Approx(-1.0 / 3.0).epsilon(1e-12));

    const std::vector<std::pair<double, double>> two{{1, 1}, {2, 2}};
    CHECK_THROWS_AS(loglog_slope(two), DomainError);
    const std::vector<std::pair<double, double>> bad{{1, 1}, {2, 0}, {3, 3}};
    CHECK_THROWS_AS(loglog_slope(bad), DomainError);
}

}
