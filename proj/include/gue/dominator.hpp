#pragma once

#include <cstdint>

#include "gue/rng.hpp"

namespace gue {

/*!
 * Piecewise envelope h_n of phi_n^2 (Bonan-Clarke bound with explicit
 * constants) for n >= 1:
 *
 *   h_n(x) = (8 pi / 3) / sqrt(4n + 2 - x^2)          |x| <= x1
 *          = (8 (pi + 1) / 3) n^{-1/6}                 x1 < |x| <= x2
 *          = 2 sqrt(2) B^2 n^{-5/6} (|x| - edge)^{-4}  |x| > x2
 *
 * with edge = sqrt(4n + 2), B = (pi + 1)^2 sqrt(8 (pi + 1) / 3). The pieces
 * join continuously at x1 and x2. p1, p2, p3 are the masses of the three
 * pieces on the half line, so the total mass is 2 (p1 + p2 + p3).
 */
struct DominatorSpec {
    std::uint64_t n = 0;
    double B = 0.0;
    double edge = 0.0;
    double x1 = 0.0;
    double x2 = 0.0;
    double plateau = 0.0;    // middle-piece value 8(pi+1)/3 n^{-1/6}
    double tail_scale = 0.0; // x2 - edge
    double p1 = 0.0;
    double p2 = 0.0;
    double p3 = 0.0;

    double half_mass() const noexcept { return p1 + p2 + p3; }
    /// Integral of h_n over the real line; the expected number of
    /// proposals per accepted variate in plain rejection.
    double total_mass() const noexcept { return 2.0 * half_mass(); }
};

DominatorSpec make_dominator(std::uint64_t n);

/// h_n(x). Even in x.
double envelope(const DominatorSpec& spec, double x);

/// Integral of h_n over [0, |x|] from the closed-form piece integrals.
double envelope_half_integral(const DominatorSpec& spec, double x);

/// CDF of |X| for X ~ h_n / int h_n.
double envelope_abs_cdf(const DominatorSpec& spec, double x);

/// Inverse CDF of |X| restricted to one piece (1, 2 or 3) at v in [0, 1].
/// Piece 3 requires v > 0.
double invert_piece(const DominatorSpec& spec, int piece, double v);

/*!
 * Draw from h_n / int h_n by inversion: a sign, a piece chosen with
 * probability p_i / (p1 + p2 + p3), then the piece's inverse CDF. Consumes
 * exactly three words of the stream.
 */
double sample_envelope(const DominatorSpec& spec, RandomStream& stream);

}  // namespace gue
