#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace gue {

/*!
 * Seeded source of the uniform, Gaussian, sign and Gamma variates used by
 * every sampler.
 *
 * The engine is std::mt19937_64, whose output sequence is fixed by the C++
 * standard, so a given seed yields the same stream on every conforming
 * platform. All derived variates are built here from raw 64-bit words rather
 * than through <random> distributions, whose algorithms are
 * implementation-defined.
 *
 * Each call to uniform() or rademacher() consumes exactly one 64-bit word.
 * standard_normal() and gamma() are rejection methods and consume a variable
 * number of words; draw_count() reports the running total.
 */
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed);

    /// Independent stream for worker `index` under a master seed.
    static RandomStream derive(std::uint64_t master_seed, std::uint64_t index);

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t draw_count() const noexcept { return draw_count_; }

    /// One raw 64-bit word.
    std::uint64_t next_word();

    /// Uniform on [0, 1) with 53 random bits; never returns 1.0.
    double uniform();

    /// Uniform on (0, 1]; for inversions that take a log or negative power.
    double uniform_open_low();

    /// Uniform integer on {0, ..., n-1}. Requires n > 0.
    std::uint64_t uniform_index(std::uint64_t n);

    /// Standard normal by the Marsaglia polar method. The second variate of
    /// each accepted pair is discarded so the stream carries no cached state.
    double standard_normal();

    /// +1 or -1 with probability 1/2 each (top bit of one word).
    int rademacher();

    /// Gamma(shape, 1) by Marsaglia-Tsang; shape < 1 via
    /// Gamma(a) = Gamma(a + 1) * U^(1/a). Throws ParameterError if shape <= 0.
    double gamma(double shape);

  private:
    std::uint64_t seed_;
    std::uint64_t draw_count_ = 0;
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer, used to spread derived seeds.
std::uint64_t mix_seed(std::uint64_t x) noexcept;

/// Parse a decimal or 0x-prefixed hexadecimal seed. Throws ParameterError.
std::uint64_t parse_seed(std::string_view text);

}  // namespace gue
