#pragma once

#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace gue {

/// Significance levels at which KS decisions are reported.
inline constexpr double kAlphaLevels[] = {0.05, 0.01, 0.001};

struct KSResult {
    double statistic = 0.0;    // sup |F_emp - F|
    double n_effective = 0.0;  // N, or ab / (a + b) for two samples
    double scaled = 0.0;       // statistic * sqrt(n_effective)
    double p_value = 1.0;      // asymptotic Kolmogorov tail
    std::map<double, bool> pass_at;

    bool passes(double alpha) const;
};

/// P(K > lambda) for the Kolmogorov distribution, 2 sum (-1)^{k-1} e^{-2 k^2 lambda^2}.
double kolmogorov_survival(double lambda);

/// lambda with kolmogorov_survival(lambda) = alpha (1.3581 at 0.05,
/// 1.6276 at 0.01, 1.9495 at 0.001).
double kolmogorov_critical(double alpha);

/*!
 * One-sample KS statistic of `samples` against `cdf`. Requires at least 100
 * samples; throws OracleError if the oracle leaves [0, 1] or decreases
 * along the sorted sample.
 */
KSResult ks_one_sample(std::vector<double> samples, const std::function<double(double)>& cdf);

/// Two-sample KS statistic. Requires at least 100 samples in each.
KSResult ks_two_sample(std::vector<double> a, std::vector<double> b);

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double stderr_slope = 0.0;
};

/// Least-squares slope of log y against log n. Requires >= 3 points, all
/// coordinates positive; throws DomainError otherwise.
SlopeFit loglog_slope(std::span<const std::pair<double, double>> points);

struct MeanEstimate {
    double mean = 0.0;
    double variance = 0.0;  // unbiased sample variance
    double std_error = 0.0;
};

MeanEstimate estimate_mean(std::span<const double> values);

}  // namespace gue
