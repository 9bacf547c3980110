#include "gue/dominator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gue/errors.hpp"

namespace gue {

using std::numbers::pi;

DominatorSpec make_dominator(std::uint64_t n)
{
    if (n == 0) {
        throw ParameterError("make_dominator: n must be at least 1");
    }
    const double nd = static_cast<double>(n);
    DominatorSpec s;
    s.n = n;
    s.B = (pi + 1.0) * (pi + 1.0) * std::sqrt(8.0 * (pi + 1.0) / 3.0);
    s.edge = std::sqrt(4.0 * nd + 2.0);
    s.x1 = std::sqrt(4.0 * nd + 2.0 - pi * pi / ((pi + 1.0) * (pi + 1.0)) * std::cbrt(nd));
    s.tail_scale = std::sqrt(s.B)
                   * std::pow(3.0 / (2.0 * std::numbers::sqrt2 * (pi + 1.0)), 0.25)
                   * std::pow(nd, -1.0 / 6.0);
    s.x2 = s.edge + s.tail_scale;
    s.plateau = 8.0 * (pi + 1.0) / 3.0 * std::pow(nd, -1.0 / 6.0);
    s.p1 = 8.0 * pi / 3.0 * std::asin(s.x1 / s.edge);
    s.p2 = s.plateau * (s.x2 - s.x1);
    s.p3 = std::sqrt(s.B) * std::pow(2.0 * std::numbers::sqrt2 / 3.0, 1.75)
           * std::pow(pi + 1.0, 0.75) / std::cbrt(nd);
    return s;
}

double envelope(const DominatorSpec& spec, double x)
{
    const double ax = std::abs(x);
    if (ax <= spec.x1) {
        return 8.0 * pi / 3.0 / std::sqrt(4.0 * static_cast<double>(spec.n) + 2.0 - ax * ax);
    }
    if (ax <= spec.x2) {
        return spec.plateau;
    }
    const double d = ax - spec.edge;
    const double d2 = d * d;
    return 2.0 * std::numbers::sqrt2 * spec.B * spec.B
           * std::pow(static_cast<double>(spec.n), -5.0 / 6.0) / (d2 * d2);
}

double envelope_half_integral(const DominatorSpec& spec, double x)
{
    const double ax = std::abs(x);
    if (ax <= spec.x1) {
        return 8.0 * pi / 3.0 * std::asin(ax / spec.edge);
    }
    if (ax <= spec.x2) {
        return spec.p1 + spec.plateau * (ax - spec.x1);
    }
    // Tail mass beyond ax scales as (ax - edge)^{-3}.
    const double ratio = spec.tail_scale / (ax - spec.edge);
    return spec.p1 + spec.p2 + spec.p3 * (1.0 - ratio * ratio * ratio);
}

double envelope_abs_cdf(const DominatorSpec& spec, double x)
{
    if (x <= 0.0) {
        return 0.0;
    }
    return std::min(1.0, envelope_half_integral(spec, x) / spec.half_mass());
}

double invert_piece(const DominatorSpec& spec, int piece, double v)
{
    switch (piece) {
    case 1:
        return spec.edge * std::abs(std::sin(v * std::asin(spec.x1 / spec.edge)));
    case 2:
        return spec.x1 + (spec.x2 - spec.x1) * v;
    case 3:
        if (!(v > 0.0)) {
            throw DomainError("invert_piece: tail piece needs v > 0");
        }
        return spec.edge + spec.tail_scale / std::cbrt(v);
    default:
        throw ParameterError("invert_piece: piece must be 1, 2 or 3");
    }
}

double sample_envelope(const DominatorSpec& spec, RandomStream& stream)
{
    const int sign = stream.rademacher();
    const double u = stream.uniform() * spec.half_mass();
    double x;
    if (u < spec.p1) {
        x = invert_piece(spec, 1, stream.uniform());
    } else if (u < spec.p1 + spec.p2) {
        x = invert_piece(spec, 2, stream.uniform());
    } else {
        x = invert_piece(spec, 3, stream.uniform_open_low());
    }
    return sign * x;
}

}  // namespace gue
