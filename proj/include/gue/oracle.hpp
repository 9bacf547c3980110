#pragma once

#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>

#include "gue/rng.hpp"

namespace gue {

/// Eigenvalue scaling. `unscaled` has weight e^{-tr H^2 / 2} (spectrum on
/// about [-2 sqrt(n), 2 sqrt(n)]); `intro` has weight e^{-(n/2) tr H^2},
/// i.e. unscaled divided by sqrt(n).
enum class Convention { unscaled, intro };

Convention parse_convention(std::string_view text);
std::string_view to_string(Convention c);
double convention_scale(Convention c, std::uint64_t n);

/// Dense Hermitian matrix, row-major.
class HermitianMatrix {
  public:
    explicit HermitianMatrix(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    std::complex<double>& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const std::complex<double>& operator()(std::size_t i, std::size_t j) const
    {
        return a_[i * n_ + j];
    }

    bool is_hermitian() const;
    double trace() const;

  private:
    std::size_t n_;
    std::vector<std::complex<double>> a_;
};

/// Entrywise GUE draw: diagonal N(0, 1), off-diagonal real and imaginary
/// parts N(0, 1/2) (unscaled); everything divided by sqrt(n) for `intro`.
HermitianMatrix sample_gue_matrix(std::size_t n, Convention convention, RandomStream& stream);

inline constexpr std::size_t kMaxOracleSize = 64;
inline constexpr int kMaxJacobiSweeps = 100;

/*!
 * Eigenvalues of a Hermitian matrix, ascending. The matrix A + iB is
 * embedded as the real symmetric [[A, -B], [B, A]], whose spectrum is that
 * of the original with every eigenvalue doubled, and diagonalized by cyclic
 * Jacobi sweeps. Throws ParameterError for n > kMaxOracleSize and
 * ConvergenceError if the sweep budget runs out.
 */
std::vector<double> eigenvalues_small(const HermitianMatrix& matrix);

/// Cyclic Jacobi on a dense real symmetric matrix (row-major, n x n);
/// returns the eigenvalues ascending.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n);

}  // namespace gue
