#include "gue/rng.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "gue/errors.hpp"

namespace gue {

std::uint64_t mix_seed(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

RandomStream::RandomStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

RandomStream RandomStream::derive(std::uint64_t master_seed, std::uint64_t index)
{
    return RandomStream(mix_seed(mix_seed(master_seed) ^ mix_seed(index + 1)));
}

std::uint64_t RandomStream::next_word()
{
    ++draw_count_;
    return engine_();
}

double RandomStream::uniform()
{
    return static_cast<double>(next_word() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform_open_low()
{
    return (static_cast<double>(next_word() >> 11) + 1.0) * 0x1.0p-53;
}

std::uint64_t RandomStream::uniform_index(std::uint64_t n)
{
    if (n == 0) {
        throw ParameterError("uniform_index: n must be positive");
    }
    // Bitmask rejection: exact, at most two words expected.
    std::uint64_t mask = n - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    while (true) {
        const std::uint64_t candidate = next_word() & mask;
        if (candidate < n) {
            return candidate;
        }
    }
}

double RandomStream::standard_normal()
{
    while (true) {
        const double u = 2.0 * uniform() - 1.0;
        const double v = 2.0 * uniform() - 1.0;
        const double s = u * u + v * v;
        if (s > 0.0 && s < 1.0) {
            return u * std::sqrt(-2.0 * std::log(s) / s);
        }
    }
}

int RandomStream::rademacher()
{
    return (next_word() >> 63) != 0 ? 1 : -1;
}

double RandomStream::gamma(double shape)
{
    if (!(shape > 0.0) || !std::isfinite(shape)) {
        throw ParameterError("gamma: shape must be a positive finite number, got "
                             + std::to_string(shape));
    }
    if (shape < 1.0) {
        const double boosted = gamma(shape + 1.0);
        return boosted * std::pow(uniform_open_low(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    while (true) {
        const double z = standard_normal();
        const double t = 1.0 + c * z;
        if (t <= 0.0) {
            continue;
        }
        const double v = t * t * t;
        const double u = uniform_open_low();
        const double z2 = z * z;
        // Squeeze first; the log test is exact.
        if (u < 1.0 - 0.0331 * z2 * z2
            || std::log(u) < 0.5 * z2 + d * (1.0 - v + std::log(v))) {
            return d * v;
        }
    }
}

std::uint64_t parse_seed(std::string_view text)
{
    int base = 10;
    if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
        base = 16;
        text.remove_prefix(2);
    }
    std::uint64_t value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value, base);
    if (text.empty() || ec != std::errc{} || ptr != end) {
        throw ParameterError("invalid seed '" + std::string(text)
                             + "': expected decimal or 0x-prefixed hex");
    }
    return value;
}

}  // namespace gue
