#include "gue/samplers.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "gue/errors.hpp"
#include "gue/vanveen.hpp"

namespace gue {
namespace {

double rejection_loop(std::uint64_t k, SamplerMode mode, const DominatorSpec& spec,
                      const PhiSquaredEvaluator& eval, std::uint64_t max_proposals,
                      RandomStream& stream, SamplerStats& stats)
{
    if (k == 0) {
        ++stats.proposals;
        ++stats.accepted;
        return stream.standard_normal();
    }
    for (std::uint64_t i = 0; i < max_proposals; ++i) {
        const double x = sample_envelope(spec, stream);
        const double u = stream.uniform();
        ++stats.proposals;
        const double threshold = u * envelope(spec, x);
        if (mode == SamplerMode::squeeze) {
            switch (classify_proposal(spec, x, threshold)) {
            case SqueezeDecision::accept:
                ++stats.squeeze_lower_accepts;
                ++stats.accepted;
                return x;
            case SqueezeDecision::reject:
                ++stats.squeeze_upper_rejects;
                continue;
            case SqueezeDecision::inconclusive:
            case SqueezeDecision::bypass:
                break;
            }
        }
        ++stats.exact_evals;
        if (threshold <= eval.phi_sq(k, x)) {
            ++stats.accepted;
            return x;
        }
    }
    std::ostringstream msg;
    msg << "phi_k^2 sampler (k = " << k << ") exceeded " << max_proposals << " proposals";
    throw BudgetError(msg.str(), max_proposals);
}

void check_max_proposals(std::uint64_t max_proposals)
{
    if (max_proposals == 0) {
        throw ParameterError("max_proposals must be positive");
    }
}

}  // namespace

SamplerMode parse_sampler_mode(std::string_view text)
{
    if (text == "plain") {
        return SamplerMode::plain;
    }
    if (text == "squeeze") {
        return SamplerMode::squeeze;
    }
    throw ParameterError("unknown sampler mode '" + std::string(text)
                         + "' (expected plain or squeeze)");
}

std::string_view to_string(SamplerMode mode)
{
    return mode == SamplerMode::plain ? "plain" : "squeeze";
}

SamplerStats& SamplerStats::operator+=(const SamplerStats& other)
{
    proposals += other.proposals;
    squeeze_lower_accepts += other.squeeze_lower_accepts;
    squeeze_upper_rejects += other.squeeze_upper_rejects;
    exact_evals += other.exact_evals;
    accepted += other.accepted;
    elapsed += other.elapsed;
    return *this;
}

SqueezeDecision classify_proposal(const DominatorSpec& spec, double x, double threshold)
{
    if (std::abs(x) > spec.x1) {
        return SqueezeDecision::bypass;
    }
    const SqueezeBounds bounds = squeeze_bounds(spec, x);
    if (threshold <= bounds.lower) {
        return SqueezeDecision::accept;
    }
    if (threshold > bounds.upper) {
        return SqueezeDecision::reject;
    }
    return SqueezeDecision::inconclusive;
}

PhiSquaredSampler::PhiSquaredSampler(std::uint64_t k, SamplerMode mode,
                                     std::uint64_t max_proposals)
    : k_(k),
      mode_(mode),
      max_proposals_(max_proposals),
      spec_(k > 0 ? make_dominator(k) : DominatorSpec{}),
      eval_(k)
{
    check_max_proposals(max_proposals);
}

double PhiSquaredSampler::operator()(RandomStream& stream, SamplerStats& stats) const
{
    return rejection_loop(k_, mode_, spec_, eval_, max_proposals_, stream, stats);
}

double sample_phi_sq_plain(std::uint64_t k, RandomStream& stream, SamplerStats& stats,
                           std::uint64_t max_proposals)
{
    return PhiSquaredSampler(k, SamplerMode::plain, max_proposals)(stream, stats);
}

double sample_phi_sq_squeeze(std::uint64_t k, RandomStream& stream, SamplerStats& stats,
                             std::uint64_t max_proposals)
{
    return PhiSquaredSampler(k, SamplerMode::squeeze, max_proposals)(stream, stats);
}

GueEigenvalueSampler::GueEigenvalueSampler(std::uint64_t n, SamplerMode mode,
                                           std::uint64_t max_proposals)
    : n_(n), mode_(mode), max_proposals_(max_proposals), eval_(n > 0 ? n - 1 : 0)
{
    if (n == 0) {
        throw ParameterError("GueEigenvalueSampler: n must be at least 1");
    }
    check_max_proposals(max_proposals);
}

double GueEigenvalueSampler::sample_index(std::uint64_t k, RandomStream& stream,
                                          SamplerStats& stats) const
{
    if (k >= n_) {
        throw ParameterError("GueEigenvalueSampler: index must be below n");
    }
    const DominatorSpec spec = k > 0 ? make_dominator(k) : DominatorSpec{};
    return rejection_loop(k, mode_, spec, eval_, max_proposals_, stream, stats);
}

double GueEigenvalueSampler::operator()(RandomStream& stream, SamplerStats& stats) const
{
    const std::uint64_t k = stream.uniform_index(n_);
    return sample_index(k, stream, stats);
}

double sample_gue_eigenvalue(std::uint64_t n, RandomStream& stream, SamplerStats& stats)
{
    return GueEigenvalueSampler(n)(stream, stats);
}

BenchmarkRow benchmark_one(SamplerMode mode, std::uint64_t n, std::uint64_t samples,
                           std::uint64_t seed)
{
    if (n == 0 || samples == 0) {
        throw ParameterError("benchmark: n and samples must be positive");
    }
    const PhiSquaredSampler sampler(n, mode);
    RandomStream stream = RandomStream::derive(seed, n);
    BenchmarkRow row;
    row.n = n;
    row.samples = samples;
    sample_batch(sampler, samples, stream, row.stats);

    const auto& st = row.stats;
    const double accepted = static_cast<double>(st.accepted);
    const double nd = static_cast<double>(n);
    const double proposals = static_cast<double>(st.proposals);
    const double exact = static_cast<double>(st.exact_evals);
    row.proposals_per_sample = proposals / accepted;
    row.exact_evals_per_sample = exact / accepted;
    row.exact_cost_share = nd * exact / (proposals + nd * exact);
    row.cost_proxy = (proposals + nd * exact) / accepted;
    row.ns_per_sample = static_cast<double>(st.elapsed.count()) / accepted;
    return row;
}

std::vector<BenchmarkRow> benchmark(SamplerMode mode, const std::vector<std::uint64_t>& n_list,
                                    std::uint64_t samples_per_n, std::uint64_t seed)
{
    if (n_list.empty()) {
        throw ParameterError("benchmark: n list must not be empty");
    }
    std::vector<BenchmarkRow> rows;
    rows.reserve(n_list.size());
    for (const auto n : n_list) {
        rows.push_back(benchmark_one(mode, n, samples_per_n, seed));
    }
    return rows;
}

}  // namespace gue
