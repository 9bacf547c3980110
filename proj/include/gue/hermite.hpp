#pragma once

#include <cstdint>
#include <vector>

#include "gue/scaled_value.hpp"

namespace gue {

/// Probabilists' Hermite polynomial H_k(x) by the three-term recurrence
/// H_{j+1} = x H_j - j H_{j-1}; O(k), overflow-free.
ScaledValue hermite_poly(std::uint64_t k, double x);

struct HermiteEval {
    std::uint64_t k = 0;
    double x = 0.0;
    double phi_sq = 0.0;      // phi_k(x)^2
    double log_phi_sq = 0.0;  // may be -inf at a zero of H_k
};

/*!
 * Squared Hermite function phi_k(x)^2 = H_k(x)^2 e^{-x^2/2} / (k! sqrt(2 pi)).
 *
 * Runs the normalized recurrence psi_j = H_j / sqrt(j!),
 *   psi_{j+1} = (x psi_j - sqrt(j) psi_{j-1}) / sqrt(j+1),
 * on |x| (so the result is exactly even), rescaling the pair by 2^-512
 * whenever |psi| passes 2^512. The Gaussian weight is applied in log space.
 */
HermiteEval phi_squared_eval(std::uint64_t k, double x);

double phi_squared(std::uint64_t k, double x);
double log_phi_squared(std::uint64_t k, double x);

/*!
 * phi_k^2 evaluator with the recurrence coefficients precomputed up to a
 * maximum index. Bit-identical to phi_squared(); used in sampling loops
 * where the same k (or range of k) is evaluated many times.
 */
class PhiSquaredEvaluator {
  public:
    explicit PhiSquaredEvaluator(std::uint64_t max_k = 0);

    /// Grow the coefficient table to cover index max_k.
    void reserve(std::uint64_t max_k);
    std::uint64_t max_k() const noexcept { return max_k_; }

    double log_phi_sq(std::uint64_t k, double x) const;
    double phi_sq(std::uint64_t k, double x) const;

  private:
    std::uint64_t max_k_ = 0;
    std::vector<double> inv_sqrt_next_;  // 1/sqrt(j+1)
    std::vector<double> ratio_;          // sqrt(j)/sqrt(j+1)
};

/// Single-eigenvalue density of GUE(n): (1/n) sum_{k<n} phi_k(x)^2.
double mixture_density(std::uint64_t n, double x);

/*!
 * CDF of phi_k^2, integral over (-inf, x], by adaptive Gauss-Kronrod to
 * absolute accuracy `tol`. Uses evenness, F(x) = 1/2 + sign(x) int_0^|x|,
 * with panels one oscillation (pi/sqrt(4k+2)) wide. Mass beyond
 * hermite_tail_cutoff(k) is treated as zero. Throws ConvergenceError.
 */
double phi_sq_cdf(std::uint64_t k, double x, double tol = 1e-10);

/// |x| beyond which phi_k^2 < 1e-30 (used as the +inf surrogate).
double hermite_tail_cutoff(std::uint64_t k);

/*!
 * Tabulated CDF of phi_k^2 for repeated evaluation: cumulative mass at panel
 * boundaries is integrated once, each query integrates only its partial
 * panel.
 */
class PhiSqCdfTable {
  public:
    PhiSqCdfTable(std::uint64_t k, double tol = 1e-10);

    double operator()(double x) const;

    std::uint64_t k() const noexcept { return k_; }
    /// Mass of [0, cutoff]; 1/2 up to quadrature error.
    double half_mass() const noexcept { return cumulative_.back(); }

  private:
    std::uint64_t k_;
    double tol_;
    double width_;
    PhiSquaredEvaluator eval_;
    std::vector<double> cumulative_;  // mass of [0, i * width_]
};

}  // namespace gue
