#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "gue/rng.hpp"

namespace gue {

/*!
 * Rejection sampler for the full ordered spectrum of GUE(n), and its
 * Gaussian beta-ensemble generalization with joint density proportional to
 *
 *   1{x_1 < ... < x_n} prod_{i<j} (x_j - x_i)^beta exp(-(beta/4) sum x_i^2).
 *
 * By AM-GM the Vandermonde factor is bounded by a product over the nested
 * pairs (j, n+1-j), j = 1..floor(n/2), of (x_{n+1-j} - x_j)^{p_j beta/2}
 * with p_j = 4n - 8j + 2, times 2^{(beta/2)(2 floor(n/2) - 2 C(n,2))}. The
 * bound factorizes into independent pairs, each drawn exactly by
 * pair_transform; odd n adds an independent Gaussian middle coordinate.
 */

inline constexpr std::uint64_t kDefaultMaxAttempts = 10'000'000;
inline constexpr std::uint64_t kProgressInterval = 100'000;

struct JointProposal {
    std::uint64_t n = 0;
    double beta = 2.0;
    std::vector<double> values;          // positions 1..n stored at 0..n-1
    std::vector<double> pair_exponents;  // p_j beta / 2, j = 1..floor(n/2)
};

struct JointSample {
    std::uint64_t n = 0;
    double beta = 2.0;
    std::vector<double> values;  // strictly increasing
    std::uint64_t attempts = 0;
};

/// Called with the running attempt count every kProgressInterval attempts.
using ProgressCallback = std::function<void(std::uint64_t attempts)>;

/*!
 * Pair (X, Y), X < Y, with density proportional to
 * (y - x)^p exp(-(x^2 + y^2) / (2 scale^2)): returns
 * ((Z - W) / 2, (Z + W) / 2) * scale with Z = sqrt(2) N and
 * W = 2 sqrt(Gamma((p + 1) / 2)) independent.
 */
std::pair<double, double> pair_transform(double p, RandomStream& stream, double scale = 1.0);

/// Exponents p_j beta / 2 of the pair bound, j = 1..floor(n/2).
std::vector<double> joint_pair_exponents(std::uint64_t n, double beta = 2.0);

/// Proposal for the GUE (beta = 2) case.
JointProposal propose_gue(std::uint64_t n, RandomStream& stream);

/// Proposal for general beta > 0; every coordinate carries the factor
/// sqrt(2 / beta), which is exactly 1 at beta = 2.
JointProposal propose(std::uint64_t n, double beta, RandomStream& stream);

/// log of the dominating bound (without the uniform) at `values`.
double log_joint_bound(std::span<const double> values, std::span<const double> pair_exponents,
                       double beta);

/// beta * sum_{i<j} log(x_j - x_i); -inf unless strictly increasing.
double log_joint_target(std::span<const double> values, double beta);

bool strictly_increasing(std::span<const double> values);

/// False for unordered proposals; otherwise draws U and accepts iff
/// log U + log_bound < log_target.
bool accept_test(const JointProposal& proposal, RandomStream& stream);

/// GUE(n) spectrum, n >= 2. Throws BudgetError carrying the attempt count.
JointSample sample_joint(std::uint64_t n, RandomStream& stream,
                         std::uint64_t max_attempts = kDefaultMaxAttempts,
                         const ProgressCallback& progress = {});

/// Gaussian beta-ensemble spectrum, n >= 2, beta > 0.
JointSample sample_joint_beta(std::uint64_t n, double beta, RandomStream& stream,
                              std::uint64_t max_attempts = kDefaultMaxAttempts,
                              const ProgressCallback& progress = {});

/// log of max prod_{i<j} (x_j - x_i) over 0 = x_1 < ... < x_n = 1.
double log_vandermonde_max(std::uint64_t n);
double vandermonde_max(std::uint64_t n);

}  // namespace gue
