#include "gue/stats.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gue/errors.hpp"

namespace gue {

namespace {

constexpr std::size_t kMinKsSamples = 100;

void finish(KSResult& r)
{
    r.scaled = r.statistic * std::sqrt(r.n_effective);
    r.p_value = kolmogorov_survival(r.scaled);
    for (const double alpha : kAlphaLevels) {
        r.pass_at[alpha] = r.scaled < kolmogorov_critical(alpha);
    }
}

}  // namespace

bool KSResult::passes(double alpha) const
{
    return scaled < kolmogorov_critical(alpha);
}

double kolmogorov_survival(double lambda)
{
    if (lambda <= 0.0) {
        return 1.0;
    }
    if (lambda < 0.2) {
        // Alternating series converges slowly here; the tail is 1 to 1e-16.
        return 1.0;
    }
    double sum = 0.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = std::exp(-2.0 * k * k * lambda * lambda);
        sum += (k % 2 == 1 ? term : -term);
        if (term < 1e-18) {
            break;
        }
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

double kolmogorov_critical(double alpha)
{
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw ParameterError("kolmogorov_critical: alpha must be in (0, 1)");
    }
    double lo = 0.2;
    double hi = 10.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (kolmogorov_survival(mid) > alpha) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

KSResult ks_one_sample(std::vector<double> samples, const std::function<double(double)>& cdf)
{
    if (samples.size() < kMinKsSamples) {
        throw ParameterError("ks_one_sample: need at least 100 samples");
    }
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    double previous = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        if (!(f >= 0.0 && f <= 1.0)) {
            std::ostringstream msg;
            msg << "ks_one_sample: oracle CDF returned " << f << " at " << samples[i];
            throw OracleError(msg.str());
        }
        if (f < previous - 1e-12) {
            std::ostringstream msg;
            msg << "ks_one_sample: oracle CDF decreases at " << samples[i];
            throw OracleError(msg.str());
        }
        previous = f;
        const double below = static_cast<double>(i) / n;
        const double above = static_cast<double>(i + 1) / n;
        d = std::max({d, f - below, above - f});
    }
    KSResult r;
    r.statistic = d;
    r.n_effective = n;
    finish(r);
    return r;
}

KSResult ks_two_sample(std::vector<double> a, std::vector<double> b)
{
    if (a.size() < kMinKsSamples || b.size() < kMinKsSamples) {
        throw ParameterError("ks_two_sample: need at least 100 samples in each");
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        // Step past every copy of the smaller value in both samples.
        const double v = std::min(a[i], b[j]);
        while (i < a.size() && a[i] == v) {
            ++i;
        }
        while (j < b.size() && b[j] == v) {
            ++j;
        }
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    KSResult r;
    r.statistic = d;
    r.n_effective = na * nb / (na + nb);
    finish(r);
    return r;
}

SlopeFit loglog_slope(std::span<const std::pair<double, double>> points)
{
    if (points.size() < 3) {
        throw DomainError("loglog_slope: need at least 3 points");
    }
    std::vector<double> lx;
    std::vector<double> ly;
    for (const auto& [n, y] : points) {
        if (!(n > 0.0) || !(y > 0.0)) {
            throw DomainError("loglog_slope: coordinates must be positive");
        }
        lx.push_back(std::log(n));
        ly.push_back(std::log(y));
    }
    const double m = static_cast<double>(lx.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= m;
    my /= m;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    if (sxx == 0.0) {
        throw DomainError("loglog_slope: all n are equal");
    }
    SlopeFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double rss = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        const double r = ly[i] - fit.intercept - fit.slope * lx[i];
        rss += r * r;
    }
    fit.stderr_slope = std::sqrt(rss / (m - 2.0) / sxx);
    return fit;
}

MeanEstimate estimate_mean(std::span<const double> values)
{
    if (values.size() < 2) {
        throw ParameterError("estimate_mean: need at least 2 values");
    }
    const double n = static_cast<double>(values.size());
    double mean = 0.0;
    for (const double v : values) {
        mean += v;
    }
    mean /= n;
    double ss = 0.0;
    for (const double v : values) {
        ss += (v - mean) * (v - mean);
    }
    MeanEstimate e;
    e.mean = mean;
    e.variance = ss / (n - 1.0);
    e.std_error = std::sqrt(e.variance / n);
    return e;
}

}  // namespace gue
