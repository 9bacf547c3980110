#include "gue/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gue/errors.hpp"

namespace gue {

Convention parse_convention(std::string_view text)
{
    if (text == "unscaled") {
        return Convention::unscaled;
    }
    if (text == "intro") {
        return Convention::intro;
    }
    throw ParameterError("unknown convention '" + std::string(text)
                         + "' (expected unscaled or intro)");
}

std::string_view to_string(Convention c)
{
    return c == Convention::unscaled ? "unscaled" : "intro";
}

double convention_scale(Convention c, std::uint64_t n)
{
    return c == Convention::unscaled ? 1.0 : 1.0 / std::sqrt(static_cast<double>(n));
}

HermitianMatrix::HermitianMatrix(std::size_t n) : n_(n), a_(n * n) {}

bool HermitianMatrix::is_hermitian() const
{
    for (std::size_t i = 0; i < n_; ++i) {
        if ((*this)(i, i).imag() != 0.0) {
            return false;
        }
        for (std::size_t j = i + 1; j < n_; ++j) {
            if ((*this)(i, j) != std::conj((*this)(j, i))) {
                return false;
            }
        }
    }
    return true;
}

double HermitianMatrix::trace() const
{
    double t = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        t += (*this)(i, i).real();
    }
    return t;
}

HermitianMatrix sample_gue_matrix(std::size_t n, Convention convention, RandomStream& stream)
{
    if (n == 0) {
        throw ParameterError("sample_gue_matrix: n must be at least 1");
    }
    const double scale = convention_scale(convention, n);
    const double off = std::numbers::sqrt2 / 2.0;
    HermitianMatrix h(n);
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = stream.standard_normal() * scale;
        for (std::size_t j = i + 1; j < n; ++j) {
            const double re = stream.standard_normal() * off * scale;
            const double im = stream.standard_normal() * off * scale;
            h(i, j) = {re, im};
            h(j, i) = {re, -im};
        }
    }
    return h;
}

std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n)
{
    const auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
    double total = 0.0;
    for (const double v : a) {
        total += v * v;
    }
    const double floor = total * 1e-32;

    for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                off += at(i, j) * at(i, j);
            }
        }
        if (off <= floor) {
            std::vector<double> eig(n);
            for (std::size_t i = 0; i < n; ++i) {
                eig[i] = at(i, i);
            }
            std::sort(eig.begin(), eig.end());
            return eig;
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) {
                    continue;
                }
                // Entries below the rounding level of both diagonals are dropped.
                const double tiny = 100.0 * std::abs(apq);
                if (sweep > 3 && std::abs(at(p, p)) + tiny == std::abs(at(p, p))
                    && std::abs(at(q, q)) + tiny == std::abs(at(q, q))) {
                    at(p, q) = 0.0;
                    at(q, p) = 0.0;
                    continue;
                }
                // Rotation zeroing a_pq (Golub & Van Loan, sym.schur2).
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = std::copysign(1.0, theta)
                                 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = at(p, k);
                    const double aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
                at(p, q) = 0.0;
                at(q, p) = 0.0;
            }
        }
    }
    throw ConvergenceError("jacobi_eigenvalues: no convergence within sweep budget");
}

std::vector<double> eigenvalues_small(const HermitianMatrix& matrix)
{
    const std::size_t n = matrix.size();
    if (n == 0 || n > kMaxOracleSize) {
        throw ParameterError("eigenvalues_small: size must be in [1, "
                             + std::to_string(kMaxOracleSize) + "]");
    }
    const std::size_t m = 2 * n;
    std::vector<double> a(m * m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto z = matrix(i, j);
            a[i * m + j] = z.real();
            a[(i + n) * m + (j + n)] = z.real();
            a[i * m + (j + n)] = -z.imag();
            a[(i + n) * m + j] = z.imag();
        }
    }
    const std::vector<double> doubled = jacobi_eigenvalues(std::move(a), m);
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) {
        eig[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
    }
    return eig;
}

}  // namespace gue
