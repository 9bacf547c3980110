#include "gue/hermite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "gue/errors.hpp"
#include "gue/quadrature.hpp"

namespace gue {
namespace {

constexpr double kRescaleAbove = 0x1p512;
constexpr double kRescaleBy = 0x1p-512;
constexpr std::int64_t kRescaleBits = 512;
constexpr double kSumRescaleAbove = 0x1p256;
constexpr double kSumRescaleBy = 0x1p-256;
constexpr std::int64_t kSumRescaleBits = 256;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
const double kHalfLogTwoPi = 0.5 * std::log(2.0 * std::numbers::pi);

// Beyond this |x| the recurrence would overflow before the rescale check
// and phi_k^2 is zero to double precision for any k we can iterate to.
constexpr double kHugeArgument = 1e100;

struct OnTheFlyCoefficients {
    void operator()(std::uint64_t j, double& inv_sqrt_next, double& ratio) const
    {
        inv_sqrt_next = 1.0 / std::sqrt(static_cast<double>(j + 1));
        ratio = std::sqrt(static_cast<double>(j)) * inv_sqrt_next;
    }
};

struct TabulatedCoefficients {
    const double* inv_sqrt_next;
    const double* ratio;
    void operator()(std::uint64_t j, double& r, double& q) const
    {
        r = inv_sqrt_next[j];
        q = ratio[j];
    }
};

// 2 log|psi_k(ax)| for ax >= 0, where psi_k = H_k / sqrt(k!).
template <class Coefficients>
double log_psi_squared(std::uint64_t k, double ax, const Coefficients& coeff)
{
    if (k == 0) {
        return 0.0;
    }
    double prev = 1.0;
    double cur = ax;
    std::int64_t exp2 = 0;
    for (std::uint64_t j = 1; j < k; ++j) {
        double r;
        double q;
        coeff(j, r, q);
        const double next = (ax * r) * cur - q * prev;
        prev = cur;
        cur = next;
        if (std::abs(cur) > kRescaleAbove) {
            cur *= kRescaleBy;
            prev *= kRescaleBy;
            exp2 += kRescaleBits;
        }
    }
    if (cur == 0.0) {
        return kNegInf;
    }
    return 2.0 * (std::log(std::abs(cur)) + static_cast<double>(exp2) * std::numbers::ln2);
}

template <class Coefficients>
double log_phi_squared_impl(std::uint64_t k, double x, const Coefficients& coeff)
{
    if (std::isnan(x)) {
        throw DomainError("phi_squared: x is NaN");
    }
    const double ax = std::abs(x);
    if (ax > kHugeArgument) {
        return kNegInf;
    }
    return log_psi_squared(k, ax, coeff) - 0.5 * ax * ax - kHalfLogTwoPi;
}

double safe_exp(double log_value)
{
    return log_value == kNegInf ? 0.0 : std::exp(log_value);
}

}  // namespace

ScaledValue hermite_poly(std::uint64_t k, double x)
{
    const ScaledValue one = ScaledValue::from(1.0);
    if (k == 0) {
        return one;
    }
    const ScaledValue sx = ScaledValue::from(x);
    ScaledValue prev = one;
    ScaledValue cur = sx;
    for (std::uint64_t j = 1; j < k; ++j) {
        ScaledValue next = sx * cur - prev * static_cast<double>(j);
        prev = cur;
        cur = next;
    }
    return cur;
}

HermiteEval phi_squared_eval(std::uint64_t k, double x)
{
    HermiteEval e;
    e.k = k;
    e.x = x;
    e.log_phi_sq = log_phi_squared(k, x);
    e.phi_sq = safe_exp(e.log_phi_sq);
    return e;
}

double log_phi_squared(std::uint64_t k, double x)
{
    return log_phi_squared_impl(k, x, OnTheFlyCoefficients{});
}

double phi_squared(std::uint64_t k, double x)
{
    return safe_exp(log_phi_squared(k, x));
}

PhiSquaredEvaluator::PhiSquaredEvaluator(std::uint64_t max_k)
{
    reserve(max_k);
}

void PhiSquaredEvaluator::reserve(std::uint64_t max_k)
{
    if (max_k <= max_k_ && !inv_sqrt_next_.empty()) {
        return;
    }
    const std::size_t old = inv_sqrt_next_.size();
    inv_sqrt_next_.resize(max_k + 1);
    ratio_.resize(max_k + 1);
    const OnTheFlyCoefficients coeff;
    for (std::size_t j = old; j <= max_k; ++j) {
        coeff(j, inv_sqrt_next_[j], ratio_[j]);
    }
    max_k_ = std::max(max_k_, max_k);
}

double PhiSquaredEvaluator::log_phi_sq(std::uint64_t k, double x) const
{
    if (k > max_k_) {
        throw ParameterError("PhiSquaredEvaluator: index beyond reserved table");
    }
    return log_phi_squared_impl(k, x,
                                TabulatedCoefficients{inv_sqrt_next_.data(), ratio_.data()});
}

double PhiSquaredEvaluator::phi_sq(std::uint64_t k, double x) const
{
    return safe_exp(log_phi_sq(k, x));
}

double mixture_density(std::uint64_t n, double x)
{
    if (n == 0) {
        throw ParameterError("mixture_density: n must be at least 1");
    }
    if (std::isnan(x)) {
        throw DomainError("mixture_density: x is NaN");
    }
    const double ax = std::abs(x);
    if (ax > kHugeArgument) {
        return 0.0;
    }
    // Sum psi_j^2 at the current scale 2^(2 exp2).
    double prev = 1.0;
    double cur = ax;
    double sum = 1.0;
    std::int64_t exp2 = 0;
    if (n > 1) {
        sum += cur * cur;
    }
    for (std::uint64_t j = 1; j + 1 < n; ++j) {
        const double r = 1.0 / std::sqrt(static_cast<double>(j + 1));
        const double q = std::sqrt(static_cast<double>(j)) * r;
        const double next = (ax * r) * cur - q * prev;
        prev = cur;
        cur = next;
        // Squares enter the sum, so rescale at half the exponent range.
        if (std::abs(cur) > kSumRescaleAbove) {
            cur *= kSumRescaleBy;
            prev *= kSumRescaleBy;
            sum *= kSumRescaleBy * kSumRescaleBy;
            exp2 += kSumRescaleBits;
        }
        sum += cur * cur;
    }
    const double log_value = std::log(sum)
                             + 2.0 * static_cast<double>(exp2) * std::numbers::ln2
                             - 0.5 * ax * ax - kHalfLogTwoPi;
    return std::exp(log_value) / static_cast<double>(n);
}

double hermite_tail_cutoff(std::uint64_t k)
{
    return 2.0 * std::sqrt(static_cast<double>(k) + 1.0) + 12.0;
}

namespace {

double oscillation_width(std::uint64_t k)
{
    return std::numbers::pi / std::sqrt(4.0 * static_cast<double>(k) + 2.0);
}

}  // namespace

double phi_sq_cdf(std::uint64_t k, double x, double tol)
{
    if (!(tol > 0.0)) {
        throw ParameterError("phi_sq_cdf: tolerance must be positive");
    }
    if (std::isnan(x)) {
        throw DomainError("phi_sq_cdf: x is NaN");
    }
    if (x == 0.0) {
        return 0.5;
    }
    const double upper = std::min(std::abs(x), hermite_tail_cutoff(k));
    const double width = oscillation_width(k);
    std::vector<double> points;
    for (double p = 0.0; p < upper; p += width) {
        points.push_back(p);
    }
    points.push_back(upper);

    PhiSquaredEvaluator eval(k);
    const auto result = integrate_adaptive(
        [&](double t) { return eval.phi_sq(k, t); }, points, 0.5 * tol);
    const double cdf = x > 0 ? 0.5 + result.value : 0.5 - result.value;
    return std::clamp(cdf, 0.0, 1.0);
}

PhiSqCdfTable::PhiSqCdfTable(std::uint64_t k, double tol)
    : k_(k), tol_(tol), width_(oscillation_width(k)), eval_(k)
{
    if (!(tol > 0.0)) {
        throw ParameterError("PhiSqCdfTable: tolerance must be positive");
    }
    const double cutoff = hermite_tail_cutoff(k);
    const auto panels = static_cast<std::size_t>(std::ceil(cutoff / width_));
    const double panel_tol = 0.5 * tol / static_cast<double>(panels);
    cumulative_.assign(panels + 1, 0.0);
    const auto f = [this](double t) { return eval_.phi_sq(k_, t); };
    for (std::size_t i = 0; i < panels; ++i) {
        const double a = static_cast<double>(i) * width_;
        const double b = static_cast<double>(i + 1) * width_;
        cumulative_[i + 1] = cumulative_[i] + integrate_adaptive(f, a, b, panel_tol).value;
    }
}

double PhiSqCdfTable::operator()(double x) const
{
    if (std::isnan(x)) {
        throw DomainError("PhiSqCdfTable: x is NaN");
    }
    const double ax = std::abs(x);
    double mass;
    const double last = static_cast<double>(cumulative_.size() - 1) * width_;
    if (ax >= last) {
        mass = cumulative_.back();
    } else {
        const auto i = static_cast<std::size_t>(ax / width_);
        const double a = static_cast<double>(i) * width_;
        mass = cumulative_[i];
        if (ax > a) {
            mass += integrate_adaptive([this](double t) { return eval_.phi_sq(k_, t); },
                                       a, ax, 0.5 * tol_)
                        .value;
        }
    }
    return std::clamp(x >= 0 ? 0.5 + mass : 0.5 - mass, 0.0, 1.0);
}

}  // namespace gue
