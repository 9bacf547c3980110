#include <cmath>
#include <set>
#include <vector>

#include "doctest.h"
#include "gue/errors.hpp"
#include "gue/rng.hpp"
#include "gue/stats.hpp"

using namespace gue;

TEST_SUITE("rng") {

TEST_CASE("uniform range and determinism")
{
    RandomStream a(42);
    const double u1 = a.uniform();
    const double u2 = a.uniform();
    CHECK(u1 >= 0.0);
    CHECK(u1 < 1.0);
    CHECK(u2 >= 0.0);
    CHECK(u2 < 1.0);
    CHECK(u1 != u2);
    CHECK(a.draw_count() == 2);

    RandomStream b(42);
    RandomStream c(42);
    for (int i = 0; i < 1000; ++i) {
        REQUIRE(b.uniform() == c.uniform());
    }
}

TEST_CASE("mt19937_64 reference word")
{
    // The standard fixes the 10000th output of a default-seeded engine.
    RandomStream s(5489);
    std::uint64_t w = 0;
    for (int i = 0; i < 10000; ++i) {
        w = s.next_word();
    }
    CHECK(w == 9981545732273789042ULL);
}

TEST_CASE("uniform mean over 1e6 draws")
{
    RandomStream s(1);
    double sum = 0.0;
    for (int i = 0; i < 1'000'000; ++i) {
        sum += s.uniform();
    }
    CHECK(std::abs(sum / 1e6 - 0.5) < 0.002);
}

TEST_CASE("uniform_open_low never returns zero and uniform_index is in range")
{
    RandomStream s(3);
    for (int i = 0; i < 10000; ++i) {
        const double u = s.uniform_open_low();
        REQUIRE(u > 0.0);
        REQUIRE(u <= 1.0);
        REQUIRE(s.uniform_index(7) < 7);
    }
    CHECK_THROWS_AS(s.uniform_index(0), ParameterError);
}

TEST_CASE("standard normal moments and symmetry")
{
    RandomStream s(2);
    const int n = 1'000'000;
    std::vector<double> x(n);
    int positive = 0;
    for (auto& v : x) {
        v = s.standard_normal();
        positive += v > 0.0;
    }
    const auto m = estimate_mean(x);
    CHECK(std::abs(m.mean) < 0.004);
    CHECK(m.variance > 0.995);
    CHECK(m.variance < 1.005);
    CHECK(std::abs(positive / double(n) - 0.5) < 0.002);
}

TEST_CASE("rademacher")
{
    RandomStream s(4);
    std::set<int> seen;
    long sum = 0;
    for (int i = 0; i < 1'000'000; ++i) {
        const int r = s.rademacher();
        seen.insert(r);
        sum += r;
    }
    CHECK(seen == std::set<int>{-1, 1});
    CHECK(std::abs(sum / 1e6) < 0.004);

    RandomStream a(9);
    RandomStream b(9);
    for (int i = 0; i < 100; ++i) {
        REQUIRE(a.rademacher() == b.rademacher());
    }
}

TEST_CASE("gamma means and domain")
{
    RandomStream s(5);
    const int n = 1'000'000;
    double sum1 = 0.0;
    double sum15 = 0.0;
    for (int i = 0; i < n; ++i) {
        sum1 += s.gamma(1.0);
        sum15 += s.gamma(1.5);
    }
    CHECK(sum1 / n > 0.997);
    CHECK(sum1 / n < 1.003);
    CHECK(std::abs(sum15 / n - 1.5) < 0.004);

    CHECK_THROWS_AS(s.gamma(0.0), ParameterError);
    CHECK_THROWS_AS(s.gamma(-1.0), ParameterError);
}

TEST_CASE("gamma with shape below one matches its mean and the Gamma(1/2) = N^2/2 law")
{
    RandomStream s(6);
    std::vector<double> g(100000);
    std::vector<double> h(100000);
    for (std::size_t i = 0; i < g.size(); ++i) {
        g[i] = s.gamma(0.5);
        const double z = s.standard_normal();
        h[i] = 0.5 * z * z;
    }
    CHECK(std::abs(estimate_mean(g).mean - 0.5) < 4.0 * estimate_mean(g).std_error);
    CHECK(ks_two_sample(g, h).passes(0.01));
}

TEST_CASE("distinct seeds give independent-looking streams")
{
    RandomStream a(100);
    RandomStream b(101);
    std::vector<double> xa(100000);
    std::vector<double> xb(100000);
    for (std::size_t i = 0; i < xa.size(); ++i) {
        xa[i] = a.uniform();
        xb[i] = b.uniform();
    }
    CHECK(ks_two_sample(xa, xb).passes(0.01));

    RandomStream d0 = RandomStream::derive(7, 0);
    RandomStream d1 = RandomStream::derive(7, 1);
    CHECK(d0.seed() != d1.seed());
    CHECK(RandomStream::derive(7, 1).seed() == d1.seed());
}

TEST_CASE("seed parsing")
{
    CHECK(parse_seed("42") == 42);
    CHECK(parse_seed("0x2a") == 42);
    CHECK(parse_seed("0XFF") == 255);
    CHECK_THROWS_AS(parse_seed(""), ParameterError);
    CHECK_THROWS_AS(parse_seed("12abc"), ParameterError);
    CHECK_THROWS_AS(parse_seed("-3"), ParameterError);
}

}
