#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace gue {

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;  // Kronrod-minus-Gauss estimate summed over intervals
    std::size_t intervals = 0;
};

using Integrand = std::function<double(double)>;

/// One 15-point Gauss-Kronrod application on [a, b].
QuadratureResult gauss_kronrod_15(const Integrand& f, double a, double b);

/*!
 * Globally adaptive 7/15-point Gauss-Kronrod integration.
 *
 * The range is first cut at `breakpoints` (sorted, including both ends);
 * then the interval with the largest error estimate is bisected until the
 * summed error falls below `abs_tol`. Throws ConvergenceError when
 * `max_intervals` is exhausted first.
 */
QuadratureResult integrate_adaptive(const Integrand& f,
                                    std::span<const double> breakpoints,
                                    double abs_tol,
                                    std::size_t max_intervals = 200000);

/// Same, on [a, b] split into `panels` equal pieces.
QuadratureResult integrate_adaptive(const Integrand& f, double a, double b,
                                    double abs_tol, std::size_t panels = 1,
                                    std::size_t max_intervals = 200000);

}  // namespace gue
