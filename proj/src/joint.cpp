#include "gue/joint.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "gue/errors.hpp"

namespace gue {
namespace {

void check_n(std::uint64_t n)
{
    if (n < 2) {
        throw ParameterError("joint sampler: n must be at least 2");
    }
}

void check_beta(double beta)
{
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw ParameterError("joint sampler: beta must be positive and finite");
    }
}

double binomial2(std::uint64_t n)
{
    return 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
}

template <class Propose>
JointSample rejection(std::uint64_t n, double beta, std::uint64_t max_attempts,
                      const ProgressCallback& progress, RandomStream& stream, Propose&& propose_fn)
{
    if (max_attempts == 0) {
        throw ParameterError("joint sampler: max_attempts must be positive");
    }
    for (std::uint64_t attempt = 1; attempt <= max_attempts; ++attempt) {
        JointProposal proposal = propose_fn();
        if (accept_test(proposal, stream)) {
            return {n, beta, std::move(proposal.values), attempt};
        }
        if (progress && attempt % kProgressInterval == 0) {
            progress(attempt);
        }
    }
    std::ostringstream msg;
    msg << "joint sampler (n = " << n << ", beta = " << beta << ") exceeded " << max_attempts
        << " attempts";
    throw BudgetError(msg.str(), max_attempts);
}

}  // namespace

std::pair<double, double> pair_transform(double p, RandomStream& stream, double scale)
{
    if (!(p >= 0.0)) {
        throw ParameterError("pair_transform: exponent must be nonnegative");
    }
    const double z = std::numbers::sqrt2 * stream.standard_normal() * scale;
    const double w = 2.0 * std::sqrt(stream.gamma(0.5 * (p + 1.0))) * scale;
    return {0.5 * (z - w), 0.5 * (z + w)};
}

std::vector<double> joint_pair_exponents(std::uint64_t n, double beta)
{
    std::vector<double> exps;
    exps.reserve(n / 2);
    const double nd = static_cast<double>(n);
    for (std::uint64_t j = 1; j <= n / 2; ++j) {
        exps.push_back((4.0 * nd - 8.0 * static_cast<double>(j) + 2.0) * beta / 2.0);
    }
    return exps;
}

JointProposal propose_gue(std::uint64_t n, RandomStream& stream)
{
    check_n(n);
    JointProposal prop;
    prop.n = n;
    prop.beta = 2.0;
    prop.values.assign(n, 0.0);
    const double nd = static_cast<double>(n);
    for (std::uint64_t j = 1; j <= n / 2; ++j) {
        const double p = 4.0 * nd - 8.0 * static_cast<double>(j) + 2.0;
        const double z = std::numbers::sqrt2 * stream.standard_normal();
        const double w = 2.0 * std::sqrt(stream.gamma(0.5 * (p + 1.0)));
        prop.values[n - j] = 0.5 * (z + w);
        prop.values[j - 1] = 0.5 * (z - w);
        prop.pair_exponents.push_back(p);
    }
    if (n % 2 == 1) {
        prop.values[n / 2] = stream.standard_normal();
    }
    return prop;
}

JointProposal propose(std::uint64_t n, double beta, RandomStream& stream)
{
    check_n(n);
    check_beta(beta);
    JointProposal prop;
    prop.n = n;
    prop.beta = beta;
    prop.values.assign(n, 0.0);
    prop.pair_exponents = joint_pair_exponents(n, beta);
    const double scale = std::sqrt(2.0 / beta);
    for (std::uint64_t j = 1; j <= n / 2; ++j) {
        const auto [lo, hi] = pair_transform(prop.pair_exponents[j - 1], stream, scale);
        prop.values[n - j] = hi;
        prop.values[j - 1] = lo;
    }
    if (n % 2 == 1) {
        prop.values[n / 2] = stream.standard_normal() * scale;
    }
    return prop;
}

bool strictly_increasing(std::span<const double> values)
{
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        if (!(values[i] < values[i + 1])) {
            return false;
        }
    }
    return true;
}

double log_joint_bound(std::span<const double> values, std::span<const double> pair_exponents,
                       double beta)
{
    const std::uint64_t n = values.size();
    double log_bound = 0.5 * beta * (2.0 * static_cast<double>(n / 2) - 2.0 * binomial2(n))
                       * std::numbers::ln2;
    for (std::size_t j = 1; j <= pair_exponents.size(); ++j) {
        log_bound += pair_exponents[j - 1] * std::log(values[n - j] - values[j - 1]);
    }
    return log_bound;
}

double log_joint_target(std::span<const double> values, double beta)
{
    if (!strictly_increasing(values)) {
        return -std::numeric_limits<double>::infinity();
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            sum += std::log(values[j] - values[i]);
        }
    }
    return beta * sum;
}

bool accept_test(const JointProposal& proposal, RandomStream& stream)
{
    if (!strictly_increasing(proposal.values)) {
        return false;
    }
    const double u = stream.uniform();
    return std::log(u) + log_joint_bound(proposal.values, proposal.pair_exponents, proposal.beta)
           < log_joint_target(proposal.values, proposal.beta);
}

JointSample sample_joint(std::uint64_t n, RandomStream& stream, std::uint64_t max_attempts,
                         const ProgressCallback& progress)
{
    check_n(n);
    return rejection(n, 2.0, max_attempts, progress, stream,
                     [&] { return propose_gue(n, stream); });
}

JointSample sample_joint_beta(std::uint64_t n, double beta, RandomStream& stream,
                              std::uint64_t max_attempts, const ProgressCallback& progress)
{
    check_n(n);
    check_beta(beta);
    return rejection(n, beta, max_attempts, progress, stream,
                     [&] { return propose(n, beta, stream); });
}

double log_vandermonde_max(std::uint64_t n)
{
    check_n(n);
    // 0 log 0 = 0.
    const auto xlogx = [](double v) { return v > 0.0 ? v * std::log(v) : 0.0; };
    const double nd = static_cast<double>(n);
    double sum = 0.0;
    for (std::uint64_t j = 0; j < n; ++j) {
        const double jd = static_cast<double>(j);
        sum += xlogx(jd) + 0.5 * xlogx(jd + 1.0) - 0.5 * xlogx(jd + nd - 1.0);
    }
    return sum;
}

double vandermonde_max(std::uint64_t n)
{
    return std::exp(log_vandermonde_max(n));
}

}  // namespace gue
