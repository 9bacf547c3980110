#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "gue/errors.hpp"
#include "gue/joint.hpp"
#include "gue/stats.hpp"

using namespace gue;
using doctest::Approx;

namespace {

// Vandermonde product of (0, interior..., 1).
double pinned_vandermonde(const std::vector<double>& interior)
{
    std::vector<double> x{0.0};
    x.insert(x.end(), interior.begin(), interior.end());
    x.push_back(1.0);
    double prod = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            prod *= x[j] - x[i];
        }
    }
    return prod;
}

// Grid search over ordered triples followed by coordinate-wise golden
// section polishing.
double brute_force_m5()
{
    std::vector<double> best{0.25, 0.5, 0.75};
    double best_value = pinned_vandermonde(best);
    const int steps = 100;
    for (int a = 1; a < steps; ++a) {
        for (int b = a + 1; b < steps; ++b) {
            for (int c = b + 1; c < steps; ++c) {
                const std::vector<double> p{a / double(steps), b / double(steps), c / double(steps)};
                const double v = pinned_vandermonde(p);
                if (v > best_value) {
                    best_value = v;
                    best = p;
                }
            }
        }
    }
    const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int round = 0; round < 60; ++round) {
        for (std::size_t i = 0; i < 3; ++i) {
            double lo = i == 0 ? 0.0 : best[i - 1];
            double hi = i == 2 ? 1.0 : best[i + 1];
            for (int it = 0; it < 100; ++it) {
                const double m1 = hi - golden * (hi - lo);
                const double m2 = lo + golden * (hi - lo);
                auto p1 = best;
                auto p2 = best;
                p1[i] = m1;
                p2[i] = m2;
                if (pinned_vandermonde(p1) < pinned_vandermonde(p2)) {
                    lo = m1;
                } else {
                    hi = m2;
                }
            }
            best[i] = 0.5 * (lo + hi);
        }
    }
    return pinned_vandermonde(best);
}

double half_normal_cdf(double x)
{
    return x <= 0.0 ? 0.0 : std::erf(x / std::numbers::sqrt2);
}

}  // namespace

TEST_SUITE("joint") {

TEST_CASE("pair transform")
{
    RandomStream s(200);
    std::vector<double> half_gap(100000);
    for (auto& v : half_gap) {
        const auto [x, y] = pair_transform(0.0, s);
        REQUIRE(y > x);
        // (Y - X)/2 = sqrt(Gamma(1/2)) = |N| / sqrt(2).
        v = std::numbers::sqrt2 * (y - x) / 2.0;
    }
    CHECK(ks_one_sample(half_gap, half_normal_cdf).passes(0.01));

    std::vector<double> sq_gap(100000);
    std::vector<double> sums(100000);
    for (std::size_t i = 0; i < sq_gap.size(); ++i) {
        const auto [x, y] = pair_transform(2.0, s);
        sq_gap[i] = (y - x) * (y - x);
        sums[i] = x + y;
    }
    const MeanEstimate m = estimate_mean(sq_gap);
    CHECK(std::abs(m.mean - 6.0) < 3.0 * m.std_error);
    // Z = X + Y has variance 2.
    const MeanEstimate z = estimate_mean(sums);
    CHECK(std::abs(z.variance - 2.0) < 3.0 * 2.0 * std::sqrt(2.0 / 1e5));

    CHECK_THROWS_AS(pair_transform(-1.0, s), ParameterError);
}

TEST_CASE("proposal structure")
{
    CHECK(joint_pair_exponents(2) == std::vector<double>{2.0});
    CHECK(joint_pair_exponents(3) == std::vector<double>{6.0});
    CHECK(joint_pair_exponents(4) == std::vector<double>{10.0, 2.0});
    CHECK(joint_pair_exponents(4, 1.0) == std::vector<double>{5.0, 1.0});

    RandomStream s(201);
    for (std::uint64_t n = 2; n <= 9; ++n) {
        const JointProposal p = propose_gue(n, s);
        REQUIRE(p.values.size() == n);
        REQUIRE(p.pair_exponents.size() == n / 2);
        for (std::size_t j = 1; j <= n / 2; ++j) {
            REQUIRE(p.values[n - j] > p.values[j - 1]);
        }
    }

    // n = 2 replays as ((Z - W)/2, (Z + W)/2), Z = sqrt(2) N, W = 2 sqrt(Gamma(3/2)).
    RandomStream a(202);
    RandomStream b(202);
    const JointProposal p = propose_gue(2, a);
    const double z = std::numbers::sqrt2 * b.standard_normal();
    const double w = 2.0 * std::sqrt(b.gamma(1.5));
    CHECK(p.values[0] == (z - w) / 2.0);
    CHECK(p.values[1] == (z + w) / 2.0);

    // n = 3: one pair with p = 6 then a standard normal middle.
    RandomStream c(203);
    RandomStream d(203);
    const JointProposal q = propose_gue(3, c);
    const double z3 = std::numbers::sqrt2 * d.standard_normal();
    const double w3 = 2.0 * std::sqrt(d.gamma(3.5));
    CHECK(q.values[0] == (z3 - w3) / 2.0);
    CHECK(q.values[2] == (z3 + w3) / 2.0);
    CHECK(q.values[1] == d.standard_normal());

    CHECK_THROWS_AS(propose_gue(1, s), ParameterError);
    CHECK_THROWS_AS(propose(4, 0.0, s), ParameterError);
}

TEST_CASE("bound dominates the Vandermonde target")
{
    RandomStream s(204);
    for (int t = 0; t < 10000; ++t) {
        const std::uint64_t n = 2 + s.uniform_index(12);
        std::vector<double> x(n);
        for (auto& v : x) {
            v = 6.0 * (2.0 * s.uniform() - 1.0);
        }
        std::sort(x.begin(), x.end());
        if (!strictly_increasing(x)) {
            continue;
        }
        for (const double beta : {0.5, 1.0, 2.0, 4.0}) {
            const double bound = log_joint_bound(x, joint_pair_exponents(n, beta), beta);
            REQUIRE(bound >= log_joint_target(x, beta) - 1e-9 * std::abs(bound));
        }
    }
}

TEST_CASE("accept test")
{
    RandomStream s(205);
    for (int i = 0; i < 100000; ++i) {
        REQUIRE(accept_test(propose_gue(2, s), s));
    }
    JointProposal unordered;
    unordered.n = 3;
    unordered.values = {0.0, 2.0, 1.0};
    unordered.pair_exponents = {6.0};
    const std::uint64_t before = s.draw_count();
    CHECK_FALSE(accept_test(unordered, s));
    CHECK(s.draw_count() == before);
    unordered.values = {0.0, 1.0, 1.0};
    CHECK_FALSE(accept_test(unordered, s));
}

TEST_CASE("n = 2 returns the first proposal")
{
    RandomStream a(206);
    RandomStream b(206);
    const JointSample js = sample_joint(2, a);
    const JointProposal p = propose_gue(2, b);
    CHECK(js.attempts == 1);
    CHECK(js.values == p.values);
}

TEST_CASE("n = 3 trace variance")
{
    RandomStream s(207);
    std::vector<double> traces(10000);
    double attempts = 0;
    for (auto& t : traces) {
        const JointSample js = sample_joint(3, s);
        REQUIRE(strictly_increasing(js.values));
        t = js.values[0] + js.values[1] + js.values[2];
        attempts += double(js.attempts);
    }
    const MeanEstimate m = estimate_mean(traces);
    // Var of the sample variance of a normal: 2 sigma^4 / (N - 1).
    CHECK(std::abs(m.variance - 3.0) < 3.0 * 3.0 * std::sqrt(2.0 / 9999.0));
    CHECK(attempts / 10000.0 > 1.0);
}

TEST_CASE("beta = 2 generalized path is bit-identical to the GUE path")
{
    for (std::uint64_t n = 2; n <= 5; ++n) {
        RandomStream a(208 + n);
        RandomStream b(208 + n);
        for (int i = 0; i < 200; ++i) {
            const JointSample x = sample_joint(n, a);
            const JointSample y = sample_joint_beta(n, 2.0, b);
            REQUIRE(x.values == y.values);
            REQUIRE(x.attempts == y.attempts);
        }
    }
}

TEST_CASE("beta = 1, n = 2 gap matches the real symmetric 2x2 ensemble")
{
    // Weight exp(-(1/4) tr H^2) on 2x2 real symmetric H: diagonal N(0, 2),
    // off-diagonal N(0, 1); gap^2 = (a - d)^2 + 4 b^2, mean 8.
    RandomStream s(215);
    RandomStream o(216);
    std::vector<double> gap(100000);
    std::vector<double> oracle(100000);
    for (std::size_t i = 0; i < gap.size(); ++i) {
        const JointSample js = sample_joint_beta(2, 1.0, s);
        gap[i] = js.values[1] - js.values[0];
        const double a = std::numbers::sqrt2 * o.standard_normal();
        const double d = std::numbers::sqrt2 * o.standard_normal();
        const double b = o.standard_normal();
        oracle[i] = std::sqrt((a - d) * (a - d) + 4.0 * b * b);
    }
    CHECK(ks_two_sample(gap, oracle).passes(0.01));
    std::vector<double> sq(gap.size());
    for (std::size_t i = 0; i < gap.size(); ++i) {
        sq[i] = gap[i] * gap[i];
    }
    const MeanEstimate m = estimate_mean(sq);
    CHECK(std::abs(m.mean - 8.0) < 3.0 * m.std_error);
}

TEST_CASE("attempt budget and progress reporting")
{
    RandomStream s(217);
    std::vector<std::uint64_t> reports;
    try {
        sample_joint(14, s, 200000, [&](std::uint64_t a) { reports.push_back(a); });
        FAIL("expected BudgetError");
    } catch (const BudgetError& e) {
        CHECK(e.attempts() == 200000);
    }
    CHECK(reports == std::vector<std::uint64_t>{100000, 200000});
    CHECK_THROWS_AS(sample_joint(3, s, 0), ParameterError);
}

TEST_CASE("maximal pinned Vandermonde product")
{
    CHECK(std::abs(log_vandermonde_max(2)) < 1e-12);
    CHECK(std::abs(log_vandermonde_max(3) - std::log(0.25)) < 1e-12);
    CHECK(vandermonde_max(2) == Approx(1.0).epsilon(1e-12));
    CHECK(vandermonde_max(3) == Approx(0.25).epsilon(1e-12));
    CHECK(vandermonde_max(5) == Approx(brute_force_m5()).epsilon(1e-6));
    // n = 4 has the closed-form optimum x = 1/2 +- 1/(2 sqrt 5).
    const double r = 0.5 / std::sqrt(5.0);
    CHECK(vandermonde_max(4) == Approx(pinned_vandermonde({0.5 - r, 0.5 + r})).epsilon(1e-12));
    CHECK_THROWS_AS(vandermonde_max(1), ParameterError);
}

}
