#pragma once

#include <cstdint>

#include "gue/dominator.hpp"

namespace gue {

/// Bound on |mu| in van Veen's representation H_n = A_n (B_n + mu R_n).
inline constexpr double kVanVeenMuBound = 4.2;

/*!
 * Terms of van Veen's representation of H_n at |x| < 2 sqrt(n + 1):
 *
 *   alpha  = arccos(|x| / (2 sqrt(n + 1)))
 *   A_n    = n! e^{(n+1)/2 + x^2/4} / (pi (n+1)^{n/2})
 *   B_n    = sqrt(pi / ((n+1) sin alpha))
 *            * sin((n+1)/2 (sin 2alpha - 2alpha) + alpha/2 + 3pi/4)
 *   R_n    = 1 / (3 (n+1) sin^2 alpha)
 *
 * and the derived approximation f = B_n^2 P of phi_n^2 with its error
 * envelopes, where P = A_n^2 e^{-x^2/2} / (sqrt(2 pi) n!) is carried as
 * log_prefactor:
 *
 *   eps_plus  = P (2 mu* (B_n)_+ R_n + mu*^2 R_n^2)
 *   eps_minus = P  2 mu* |B_n R_n|
 *
 * with mu* = 4.2. Then (f - eps_minus)_+ <= phi_n^2 <= f + eps_plus.
 */
struct VanVeenTerms {
    std::uint64_t n = 0;
    double x = 0.0;
    double alpha = 0.0;
    double log_prefactor = 0.0;
    double B_term = 0.0;
    double R_term = 0.0;
    double f = 0.0;
    double eps_plus = 0.0;
    double eps_minus = 0.0;

    double lower() const noexcept { return f > eps_minus ? f - eps_minus : 0.0; }
    double upper() const noexcept { return f + eps_plus; }
};

/// Largest |x| accepted by evaluate_vanveen: 2 sqrt(n+1) (1 - 1e-12).
double vanveen_domain_limit(std::uint64_t n);

/// Throws DomainError when |x| exceeds vanveen_domain_limit(n) and
/// ParameterError for n = 0.
VanVeenTerms evaluate_vanveen(std::uint64_t n, double x);

/// f_n(x), with f_n = 0 for |x| > 2 sqrt(n + 1).
double vanveen_approximation(std::uint64_t n, double x);

/// Gap min(f + eps_plus, h_n) - (f - eps_minus)_+ between the squeeze bounds.
double delta_eps(const DominatorSpec& spec, double x);
double delta_eps(std::uint64_t n, double x);

/// Bounds used by the squeeze test: lower, upper (capped by h_n).
struct SqueezeBounds {
    double lower = 0.0;
    double upper = 0.0;
};
SqueezeBounds squeeze_bounds(const DominatorSpec& spec, double x);

}  // namespace gue
