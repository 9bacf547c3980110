#pragma once

#include <chrono>
#include <cstdint>
#include <string_view>
#include <vector>

#include "gue/dominator.hpp"
#include "gue/hermite.hpp"
#include "gue/rng.hpp"

namespace gue {

enum class SamplerMode { plain, squeeze };

SamplerMode parse_sampler_mode(std::string_view text);
std::string_view to_string(SamplerMode mode);

/// Counters accumulated by the rejection samplers. Additive across workers.
struct SamplerStats {
    std::uint64_t proposals = 0;
    std::uint64_t squeeze_lower_accepts = 0;
    std::uint64_t squeeze_upper_rejects = 0;
    std::uint64_t exact_evals = 0;
    std::uint64_t accepted = 0;
    std::chrono::nanoseconds elapsed{0};

    SamplerStats& operator+=(const SamplerStats& other);
};

inline constexpr std::uint64_t kDefaultMaxProposals = 1'000'000;

/// Outcome of the squeeze stage for one proposal.
enum class SqueezeDecision {
    accept,        // below the lower bound: exact test would accept
    reject,        // above the upper bound: exact test would reject
    inconclusive,  // between the bounds: needs phi_k^2
    bypass,        // |x| > x1: squeeze not applied
};

/// Squeeze classification of a proposal x with threshold u * h_k(x).
SqueezeDecision classify_proposal(const DominatorSpec& spec, double x, double threshold);

/*!
 * Exact sampler for the density phi_k^2.
 *
 * k = 0 draws a standard normal directly. For k >= 1 each proposal draws X
 * from h_k / int h_k and U uniform, and accepts iff U h_k(X) <= phi_k^2(X).
 * In squeeze mode, proposals with |X| <= x1(k) are first compared against
 * the van Veen bounds (f - eps_minus)_+ and f + eps_plus, and phi_k^2 is
 * evaluated only when the comparison is inconclusive.
 */
class PhiSquaredSampler {
  public:
    PhiSquaredSampler(std::uint64_t k, SamplerMode mode,
                      std::uint64_t max_proposals = kDefaultMaxProposals);

    /// Throws BudgetError after max_proposals proposals without acceptance.
    double operator()(RandomStream& stream, SamplerStats& stats) const;

    std::uint64_t k() const noexcept { return k_; }
    SamplerMode mode() const noexcept { return mode_; }
    const DominatorSpec& dominator() const noexcept { return spec_; }

  private:
    std::uint64_t k_;
    SamplerMode mode_;
    std::uint64_t max_proposals_;
    DominatorSpec spec_;
    PhiSquaredEvaluator eval_;
};

double sample_phi_sq_plain(std::uint64_t k, RandomStream& stream, SamplerStats& stats,
                           std::uint64_t max_proposals = kDefaultMaxProposals);
double sample_phi_sq_squeeze(std::uint64_t k, RandomStream& stream, SamplerStats& stats,
                             std::uint64_t max_proposals = kDefaultMaxProposals);

/*!
 * One uniformly chosen eigenvalue of GUE(n) (unscaled convention: weight
 * e^{-x^2/2}): draw K uniform on {0, ..., n-1}, then sample phi_K^2.
 */
class GueEigenvalueSampler {
  public:
    explicit GueEigenvalueSampler(std::uint64_t n, SamplerMode mode = SamplerMode::squeeze,
                                  std::uint64_t max_proposals = kDefaultMaxProposals);

    double operator()(RandomStream& stream, SamplerStats& stats) const;

    /// The draw conditioned on index k (the second stage alone).
    double sample_index(std::uint64_t k, RandomStream& stream, SamplerStats& stats) const;

    std::uint64_t n() const noexcept { return n_; }

  private:
    std::uint64_t n_;
    SamplerMode mode_;
    std::uint64_t max_proposals_;
    PhiSquaredEvaluator eval_;
};

double sample_gue_eigenvalue(std::uint64_t n, RandomStream& stream, SamplerStats& stats);

/// `count` draws from `sampler`, timing the batch into stats.elapsed.
template <class Sampler>
std::vector<double> sample_batch(const Sampler& sampler, std::size_t count,
                                 RandomStream& stream, SamplerStats& stats)
{
    std::vector<double> out;
    out.reserve(count);
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(sampler(stream, stats));
    }
    stats.elapsed += std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::steady_clock::now() - start);
    return out;
}

/// One row of the runtime benchmark for the phi_n^2 sampler.
struct BenchmarkRow {
    std::uint64_t n = 0;
    std::uint64_t samples = 0;
    double proposals_per_sample = 0.0;
    double exact_evals_per_sample = 0.0;
    /// n * exact_evals / (proposals + n * exact_evals)
    double exact_cost_share = 0.0;
    /// (proposals + n * exact_evals) / accepted: recurrence steps plus
    /// proposal overhead per variate.
    double cost_proxy = 0.0;
    double ns_per_sample = 0.0;
    SamplerStats stats;
};

BenchmarkRow benchmark_one(SamplerMode mode, std::uint64_t n, std::uint64_t samples,
                           std::uint64_t seed);
std::vector<BenchmarkRow> benchmark(SamplerMode mode, const std::vector<std::uint64_t>& n_list,
                                    std::uint64_t samples_per_n, std::uint64_t seed);

}  // namespace gue
