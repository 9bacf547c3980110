#include "gue/verify.hpp"

#include "gue/dominator.hpp"
#include "gue/errors.hpp"
#include "gue/hermite.hpp"
#include "gue/joint.hpp"
#include "gue/oracle.hpp"
#include "gue/quadrature.hpp"
#include "gue/rng.hpp"
#include "gue/samplers.hpp"
#include "gue/stats.hpp"
#include "gue/vanveen.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>

namespace gue::verify {

namespace {

constexpr double kAlphaTwoSample = 0.01;

std::string fmt(const char* format, auto... args)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

void log_line(const Options& options, const std::string& line)
{
    if (options.log != nullptr) {
        *options.log << line << std::endl;
    }
}

RandomStream stream_for(const Options& options, int criterion, std::uint64_t index)
{
    return RandomStream::derive(options.seed,
                                static_cast<std::uint64_t>(criterion) * 1000003ULL + index);
}

std::size_t scaled_count(const Options& options, std::size_t full, std::size_t quick)
{
    return options.quick ? quick : full;
}

std::string ks_detail(const KSResult& r)
{
    return fmt("D=%.3g N_eff=%.0f p=%.3g", r.statistic, r.n_effective, r.p_value);
}

std::vector<double> draw(const PhiSquaredSampler& sampler, std::size_t count, RandomStream& stream,
                         SamplerStats& stats)
{
    return sample_batch(sampler, count, stream, stats);
}

// 1. One-sample KS of squeeze draws against the quadrature CDF.
std::vector<Check> exactness(const Options& options)
{
    const std::size_t count = scaled_count(options, 100000, 10000);
    std::vector<Check> out;
    std::uint64_t index = 0;
    for (std::uint64_t k : {1ULL, 3ULL, 10ULL, 100ULL, 1000ULL}) {
        const PhiSquaredSampler sampler(k, SamplerMode::squeeze);
        RandomStream stream = stream_for(options, 1, index++);
        SamplerStats stats;
        auto samples = draw(sampler, count, stream, stats);
        const PhiSqCdfTable table(k);
        const auto r = ks_one_sample(std::move(samples), [&](double x) { return table(x); });
        out.push_back(less_than(fmt("ks_one_sample k=%llu", static_cast<unsigned long long>(k)),
                                r.scaled, 1.95, ks_detail(r)));
    }
    return out;
}

// 2. Plain and squeeze samplers produce the same distribution.
std::vector<Check> equivalence(const Options& options)
{
    const std::size_t count = scaled_count(options, 100000, 10000);
    const double critical = kolmogorov_critical(kAlphaTwoSample);
    std::vector<Check> out;
    std::uint64_t index = 0;
    for (std::uint64_t k : {1ULL, 10ULL, 100ULL}) {
        RandomStream a_stream = stream_for(options, 2, index++);
        RandomStream b_stream = stream_for(options, 2, index++);
        SamplerStats stats;
        auto a = draw(PhiSquaredSampler(k, SamplerMode::plain), count, a_stream, stats);
        auto b = draw(PhiSquaredSampler(k, SamplerMode::squeeze), count, b_stream, stats);
        const auto r = ks_two_sample(std::move(a), std::move(b));
        out.push_back(less_than(
            fmt("ks_two_sample plain vs squeeze k=%llu", static_cast<unsigned long long>(k)),
            r.scaled, critical, ks_detail(r)));
    }
    return out;
}

// Integral of h_n over the real line by adaptive quadrature. The tail
// beyond x2 is mapped onto (0, 1] through x = edge + tail_scale / u.
double envelope_mass_by_quadrature(const DominatorSpec& spec)
{
    const double scale = spec.total_mass();
    const double tol = 1e-13 * scale;
    const auto h = [&](double x) { return envelope(spec, x); };
    const std::array<double, 3> body{0.0, spec.x1, spec.x2};
    const double head = integrate_adaptive(h, body, tol).value;
    const auto mapped = [&](double u) {
        if (u <= 0.0) {
            return 0.0;
        }
        return envelope(spec, spec.edge + spec.tail_scale / u) * spec.tail_scale / (u * u);
    };
    const double tail = integrate_adaptive(mapped, 0.0, 1.0, tol).value;
    return 2.0 * (head + tail);
}

// 3. Proposals per accept against the closed-form envelope mass.
std::vector<Check> rejection_constant(const Options& options)
{
    std::vector<Check> out;
    std::uint64_t index = 0;
    for (std::uint64_t n : {10ULL, 1000ULL, 100000ULL}) {
        const std::size_t accepts =
            scaled_count(options, 100000, n >= 100000 ? 2000 : 10000);
        const PhiSquaredSampler sampler(n, SamplerMode::squeeze);
        RandomStream stream = stream_for(options, 3, index++);
        SamplerStats stats;
        draw(sampler, accepts, stream, stats);
        const double mass = sampler.dominator().total_mass();
        const double ratio =
            static_cast<double>(stats.proposals) / static_cast<double>(stats.accepted);
        // Proposals until acceptance are geometric with success 1 / mass.
        const double se = std::sqrt(mass * (mass - 1.0) / static_cast<double>(stats.accepted));
        const auto nn = static_cast<unsigned long long>(n);
        out.push_back(at_most(fmt("proposals per accept n=%llu", nn), std::abs(ratio - mass) / se,
                              3.0,
                              fmt("ratio=%.5f mass=%.5f se=%.3g accepts=%llu", ratio, mass, se,
                                  static_cast<unsigned long long>(stats.accepted))));

        const double quad = envelope_mass_by_quadrature(sampler.dominator());
        out.push_back(less_than(fmt("closed-form mass vs quadrature n=%llu", nn),
                                std::abs(quad - mass) / mass, 1e-8,
                                fmt("closed=%.15g quadrature=%.15g", mass, quad)));
    }
    return out;
}

// 4. Cost proxy slopes for the squeeze and plain samplers.
std::vector<Check> sublinearity(const Options& options)
{
    const std::vector<std::uint64_t> ns{100, 1000, 10000, 100000};
    std::vector<std::pair<double, double>> squeeze_cost;
    std::vector<std::pair<double, double>> squeeze_exact;
    std::vector<std::pair<double, double>> plain_cost;
    std::ostringstream squeeze_rows;
    std::ostringstream plain_rows;
    for (auto n : ns) {
        const auto nd = static_cast<double>(n);
        const auto sq = benchmark_one(SamplerMode::squeeze, n, scaled_count(options, 20000, 2000),
                                      options.seed ^ 0x4ULL);
        squeeze_cost.emplace_back(nd, sq.cost_proxy);
        squeeze_exact.emplace_back(nd, sq.exact_evals_per_sample);
        squeeze_rows << fmt(" n=%g:%.4g", nd, sq.cost_proxy);
        const auto pl = benchmark_one(SamplerMode::plain, n, scaled_count(options, 1000, 150),
                                      options.seed ^ 0x40ULL);
        plain_cost.emplace_back(nd, pl.cost_proxy);
        plain_rows << fmt(" n=%g:%.4g", nd, pl.cost_proxy);
        log_line(options, fmt("  n=%g squeeze cost %.4g (%.3g ms/sample), plain cost %.4g", nd,
                              sq.cost_proxy, sq.ns_per_sample * 1e-6, pl.cost_proxy));
    }
    const auto fs = loglog_slope(squeeze_cost);
    const auto fe = loglog_slope(squeeze_exact);
    const auto fp = loglog_slope(plain_cost);
    return {
        in_window("squeeze cost proxy slope", fs.slope, 0.55, 0.80,
                  fmt("stderr=%.3g;", fs.stderr_slope) + squeeze_rows.str()),
        in_window("plain cost proxy slope", fp.slope, 0.9, 1.1,
                  fmt("stderr=%.3g;", fp.stderr_slope) + plain_rows.str()),
        in_window("squeeze exact evals per sample slope", fe.slope, -0.45, -0.20,
                  fmt("stderr=%.3g", fe.stderr_slope)),
    };
}

// 5. Sandwich and domination on uniform grids.
std::vector<Check> squeeze_validity(const Options& /*options*/)
{
    constexpr std::size_t points = 10000;
    std::vector<Check> out;
    for (std::uint64_t n : {5ULL, 10ULL, 50ULL, 200ULL, 1000ULL}) {
        const auto spec = make_dominator(n);
        const PhiSquaredEvaluator eval(n);
        double sandwich = 0.0;
        double domination = -1.0;
        double wide_domination = -1.0;
        std::size_t violations = 0;
        const double reach = hermite_tail_cutoff(n);
        for (std::size_t i = 0; i < points; ++i) {
            const double t = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(points - 1);
            const double x = t * spec.x1;
            const double phi = eval.phi_sq(n, x);
            const double h = envelope(spec, x);
            const auto b = squeeze_bounds(spec, x);
            const double gap = std::max(b.lower - phi, phi - b.upper) / h;
            sandwich = std::max(sandwich, gap);
            if (gap > 1e-10) {
                ++violations;
            }
            domination = std::max(domination, (phi - h) / h);

            const double y = t * reach;
            const double hy = envelope(spec, y);
            wide_domination = std::max(wide_domination, (eval.phi_sq(n, y) - hy) / hy);
        }
        const auto nn = static_cast<unsigned long long>(n);
        out.push_back(at_most(fmt("sandwich n=%llu", nn), sandwich, 1e-10,
                              fmt("max excess / h over |x|<=x1; %zu violating points",
                                  violations)));
        out.push_back(at_most(fmt("domination n=%llu", nn), domination, 0.0,
                              "max (phi^2 - h) / h over |x|<=x1"));
        out.push_back(at_most(fmt("domination wide grid n=%llu", nn), wide_domination, 0.0,
                              fmt("max (phi^2 - h) / h over |x|<=%.4g", reach)));
    }
    return out;
}

// 6. Integrated squeeze gap over [0, x1] scales like n^{-1/3}.
std::vector<Check> gap_scaling(const Options& /*options*/)
{
    std::vector<std::pair<double, double>> raw;
    double lo = INFINITY;
    double hi = 0.0;
    std::ostringstream rows;
    for (std::uint64_t n : {100ULL, 1000ULL, 10000ULL}) {
        const auto spec = make_dominator(n);
        const auto nd = static_cast<double>(n);
        const double width = std::numbers::pi / std::sqrt(4.0 * nd + 2.0);
        const auto panels = static_cast<std::size_t>(std::ceil(spec.x1 / width));
        const auto r = integrate_adaptive([&](double x) { return delta_eps(spec, x); }, 0.0,
                                          spec.x1, 1e-10, panels, 2000000);
        raw.emplace_back(nd, r.value);
        const double scaled = std::cbrt(nd) * r.value;
        lo = std::min(lo, scaled);
        hi = std::max(hi, scaled);
        rows << fmt(" n=%g:I=%.6g,n^(1/3)I=%.4g", nd, r.value, scaled);
    }
    const auto fit = loglog_slope(raw);
    return {
        less_than("n^(1/3) * integral max/min ratio", hi / lo, 3.0, rows.str()),
        in_window("raw integral slope", fit.slope, -0.45, -0.20,
                  fmt("stderr=%.3g", fit.stderr_slope)),
    };
}

// 7. E[X^2] = n for one eigenvalue of the unscaled ensemble.
std::vector<Check> second_moment(const Options& options)
{
    const std::size_t count = scaled_count(options, 100000, 10000);
    std::vector<Check> out;
    std::uint64_t index = 0;
    for (std::uint64_t n : {2ULL, 50ULL, 1000ULL}) {
        const GueEigenvalueSampler sampler(n);
        RandomStream stream = stream_for(options, 7, index++);
        SamplerStats stats;
        std::vector<double> squares = sample_batch(sampler, count, stream, stats);
        for (double& v : squares) {
            v *= v;
        }
        const auto m = estimate_mean(squares);
        const auto nd = static_cast<double>(n);
        const auto nn = static_cast<unsigned long long>(n);

        const double reach = hermite_tail_cutoff(n);
        const double width = std::numbers::pi / std::sqrt(4.0 * nd + 2.0);
        const auto panels = static_cast<std::size_t>(std::ceil(2.0 * reach / width));
        const double quad =
            integrate_adaptive([&](double x) { return x * x * mixture_density(n, x); }, -reach,
                               reach, 1e-10 * nd, panels)
                .value;
        out.push_back(at_most(fmt("mean of X^2 n=%llu", nn), std::abs(m.mean - quad) / m.std_error,
                              3.0,
                              fmt("mean=%.6g se=%.3g quadrature=%.10g", m.mean, m.std_error,
                                  quad)));
        out.push_back(less_than(fmt("quadrature second moment n=%llu", nn),
                                std::abs(quad - nd) / nd, 1e-8, fmt("quadrature=%.12g", quad)));
    }
    return out;
}

// 8. n = 2 joint sampler accepts every proposal; the trace has variance 2.
std::vector<Check> joint_pair(const Options& options)
{
    const std::size_t runs = scaled_count(options, 100000, 10000);
    RandomStream stream = stream_for(options, 8, 0);
    std::uint64_t max_attempts = 0;
    std::vector<double> traces;
    traces.reserve(runs);
    for (std::size_t i = 0; i < runs; ++i) {
        const auto s = sample_joint(2, stream);
        max_attempts = std::max(max_attempts, s.attempts);
        traces.push_back(s.values[0] + s.values[1]);
    }
    const auto m = estimate_mean(traces);
    const double sigma = 2.0 * std::sqrt(2.0 / static_cast<double>(runs - 1));
    return {
        at_most("max attempts per sample", static_cast<double>(max_attempts), 1.0,
                fmt("%zu runs", runs)),
        at_most("Var(X1+X2) vs 2", std::abs(m.variance - 2.0) / sigma, 3.0,
                fmt("variance=%.5f sigma=%.3g", m.variance, sigma)),
    };
}

// 9. Joint sampler, mixture sampler and matrix eigenvalues agree.
std::vector<Check> triangle(const Options& options)
{
    const std::size_t count = scaled_count(options, 10000, 2000);
    const double critical = kolmogorov_critical(kAlphaTwoSample);
    std::vector<Check> out;
    for (std::uint64_t n : {2ULL, 3ULL, 4ULL}) {
        const auto nn = static_cast<unsigned long long>(n);
        const auto started = std::chrono::steady_clock::now();
        RandomStream joint_stream = stream_for(options, 9, 10 * n);
        RandomStream pick_stream = stream_for(options, 9, 10 * n + 1);
        RandomStream mixture_stream = stream_for(options, 9, 10 * n + 2);
        RandomStream matrix_stream = stream_for(options, 9, 10 * n + 3);

        std::vector<std::vector<double>> joint_order(n);
        std::vector<double> joint_coordinate;
        std::uint64_t total_attempts = 0;
        std::uint64_t max_attempts = 0;
        for (std::size_t i = 0; i < count; ++i) {
            const auto s = sample_joint(n, joint_stream);
            total_attempts += s.attempts;
            max_attempts = std::max(max_attempts, s.attempts);
            for (std::size_t j = 0; j < n; ++j) {
                joint_order[j].push_back(s.values[j]);
            }
            joint_coordinate.push_back(s.values[pick_stream.uniform_index(n)]);
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        const std::string attempts =
            fmt("attempts mean=%.3g max=%llu joint time=%.2fs",
                static_cast<double>(total_attempts) / static_cast<double>(count),
                static_cast<unsigned long long>(max_attempts), seconds);
        log_line(options, fmt("  n=%llu ", nn) + attempts);

        const GueEigenvalueSampler mixture(n);
        SamplerStats stats;
        auto mixed = sample_batch(mixture, count, mixture_stream, stats);
        const auto r = ks_two_sample(joint_coordinate, std::move(mixed));
        out.push_back(less_than(fmt("joint coordinate vs mixture n=%llu", nn), r.scaled, critical,
                                ks_detail(r) + "; " + attempts));

        std::vector<std::vector<double>> oracle_order(n);
        for (std::size_t i = 0; i < count; ++i) {
            const auto ev = eigenvalues_small(sample_gue_matrix(n, Convention::unscaled,
                                                                matrix_stream));
            for (std::size_t j = 0; j < n; ++j) {
                oracle_order[j].push_back(ev[j]);
            }
        }
        for (std::size_t j = 0; j < n; ++j) {
            const auto rj = ks_two_sample(joint_order[j], oracle_order[j]);
            out.push_back(less_than(fmt("order statistic %zu vs eigensolver n=%llu", j + 1, nn),
                                    rj.scaled, critical, ks_detail(rj)));
        }
    }
    return out;
}

bool bit_equal(const std::vector<double>& a, const std::vector<double>& b)
{
    if (a.size() != b.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::bit_cast<std::uint64_t>(a[i]) != std::bit_cast<std::uint64_t>(b[i])) {
            return false;
        }
    }
    return true;
}

// 10. beta generalization: reduces to the base path at beta = 2; the gap
// moment at beta = 1, n = 2.
std::vector<Check> beta_generalization(const Options& options)
{
    const std::size_t per_n = scaled_count(options, 1000, 200);
    std::size_t mismatches = 0;
    std::size_t compared = 0;
    for (std::uint64_t n : {2ULL, 3ULL, 4ULL, 5ULL}) {
        const std::uint64_t seed = mix_seed(options.seed + n);
        RandomStream base(seed);
        RandomStream general(seed);
        for (std::size_t i = 0; i < per_n; ++i) {
            const auto a = sample_joint(n, base);
            const auto b = sample_joint_beta(n, 2.0, general);
            ++compared;
            if (!bit_equal(a.values, b.values) || a.attempts != b.attempts) {
                ++mismatches;
            }
        }
        if (base.draw_count() != general.draw_count()) {
            ++mismatches;
        }
    }

    const std::size_t runs = scaled_count(options, 100000, 10000);
    RandomStream stream = stream_for(options, 10, 1);
    std::vector<double> gaps;
    gaps.reserve(runs);
    for (std::size_t i = 0; i < runs; ++i) {
        const auto s = sample_joint_beta(2, 1.0, stream);
        const double d = s.values[1] - s.values[0];
        gaps.push_back(d * d);
    }
    const auto m = estimate_mean(gaps);
    return {
        at_most("beta=2 general vs base mismatches", static_cast<double>(mismatches), 0.0,
                fmt("%zu samples over n=2..5, bitwise", compared)),
        at_most("E[(X2-X1)^2] vs 4 at beta=1 n=2", std::abs(m.mean - 4.0) / m.std_error, 3.0,
                fmt("mean=%.5f se=%.3g", m.mean, m.std_error)),
    };
}

double pinned_vandermonde(const std::vector<double>& interior)
{
    std::vector<double> x{0.0};
    x.insert(x.end(), interior.begin(), interior.end());
    x.push_back(1.0);
    double prod = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            prod *= x[j] - x[i];
        }
    }
    return prod;
}

// Maximizes the pinned Vandermonde product over `free_points` interior
// points: coarse grid search, then cyclic golden-section refinement.
double maximize_pinned_vandermonde(std::size_t free_points)
{
    constexpr int steps = 60;
    std::vector<double> best(free_points);
    for (std::size_t i = 0; i < free_points; ++i) {
        best[i] = static_cast<double>(i + 1) / static_cast<double>(free_points + 1);
    }
    double best_value = pinned_vandermonde(best);
    std::vector<int> idx(free_points);
    for (std::size_t i = 0; i < free_points; ++i) {
        idx[i] = static_cast<int>(i) + 1;
    }
    // Enumerate strictly increasing index tuples in (0, steps).
    while (true) {
        std::vector<double> p(free_points);
        for (std::size_t i = 0; i < free_points; ++i) {
            p[i] = idx[i] / double(steps);
        }
        const double v = pinned_vandermonde(p);
        if (v > best_value) {
            best_value = v;
            best = p;
        }
        // Advance to the next tuple; stop after the last one.
        bool advanced = false;
        for (std::size_t pos = free_points; pos-- > 0;) {
            if (idx[pos] < steps - static_cast<int>(free_points - pos)) {
                ++idx[pos];
                for (std::size_t q = pos + 1; q < free_points; ++q) {
                    idx[q] = idx[q - 1] + 1;
                }
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            break;
        }
    }
    const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int round = 0; round < 80; ++round) {
        for (std::size_t i = 0; i < free_points; ++i) {
            double lo = i == 0 ? 0.0 : best[i - 1];
            double hi = i + 1 == free_points ? 1.0 : best[i + 1];
            for (int it = 0; it < 100; ++it) {
                auto p1 = best;
                auto p2 = best;
                p1[i] = hi - golden * (hi - lo);
                p2[i] = lo + golden * (hi - lo);
                if (pinned_vandermonde(p1) < pinned_vandermonde(p2)) {
                    lo = p1[i];
                } else {
                    hi = p2[i];
                }
            }
            best[i] = 0.5 * (lo + hi);
        }
    }
    return pinned_vandermonde(best);
}

// 11. Closed-form Vandermonde maxima.
std::vector<Check> vandermonde(const Options& /*options*/)
{
    const double m2 = log_vandermonde_max(2);
    const double m3 = log_vandermonde_max(3);
    const double m5 = vandermonde_max(5);
    const double numeric = maximize_pinned_vandermonde(3);
    return {
        at_most("log M_2 vs log 1", std::abs(m2), 1e-12, fmt("log M_2=%.3g", m2)),
        at_most("log M_3 vs log 0.25", std::abs(m3 - std::log(0.25)), 1e-12,
                fmt("log M_3=%.17g", m3)),
        at_most("M_5 vs numerical maximum", std::abs(m5 - numeric) / numeric, 1e-6,
                fmt("formula=%.15g numeric=%.15g", m5, numeric)),
    };
}

bool decide(const Check& c)
{
    if (std::isnan(c.statistic)) {
        return false;
    }
    switch (c.relation) {
    case Relation::less:
        return c.statistic < c.threshold;
    case Relation::less_equal:
        return c.statistic <= c.threshold;
    case Relation::within:
        return c.statistic >= c.threshold_low && c.statistic <= c.threshold;
    }
    return false;
}

std::string_view relation_name(Relation r)
{
    switch (r) {
    case Relation::less:
        return "<";
    case Relation::less_equal:
        return "<=";
    case Relation::within:
        return "in";
    }
    return "?";
}

std::string lower_copy(std::string_view s)
{
    std::string out(s);
    for (char& c : out) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

const Criterion& find_criterion(std::string_view token)
{
    const auto& all = criteria();
    const std::string t = lower_copy(token);
    std::string digits = t;
    if (!digits.empty() && digits.front() == 'c') {
        digits.erase(0, 1);
    }
    if (!digits.empty()
        && std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        const int id = std::stoi(digits);
        for (const auto& c : all) {
            if (c.id == id) {
                return c;
            }
        }
    }
    for (const auto& c : all) {
        if (c.name == t) {
            return c;
        }
    }
    throw ParameterError("unknown verify suite '" + std::string(token) + "'");
}

}  // namespace

Check less_than(std::string test, double statistic, double threshold, std::string detail)
{
    Check c{std::move(test), statistic, threshold, Relation::less, 0.0, false, std::move(detail)};
    c.pass = decide(c);
    return c;
}

Check at_most(std::string test, double statistic, double threshold, std::string detail)
{
    Check c{std::move(test), statistic, threshold, Relation::less_equal, 0.0, false,
            std::move(detail)};
    c.pass = decide(c);
    return c;
}

Check in_window(std::string test, double statistic, double low, double high, std::string detail)
{
    Check c{std::move(test), statistic, high, Relation::within, low, false, std::move(detail)};
    c.pass = decide(c);
    return c;
}

bool CriterionResult::pass() const
{
    return !checks.empty()
           && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const std::vector<Criterion>& criteria()
{
    static const std::vector<Criterion> list{
        {1, "exactness", "squeeze draws vs quadrature CDF, k in {1,3,10,100,1000}", exactness},
        {2, "equivalence", "plain vs squeeze two-sample KS, k in {1,10,100}", equivalence},
        {3, "rejection-constant", "proposals per accept equals the envelope mass",
         rejection_constant},
        {4, "sublinearity", "cost proxy log-log slopes, n in 1e2..1e5", sublinearity},
        {5, "squeeze-validity", "sandwich and domination on grids", squeeze_validity},
        {6, "gap-scaling", "integrated squeeze gap scales like n^(-1/3)", gap_scaling},
        {7, "second-moment", "E[X^2] = n for one eigenvalue", second_moment},
        {8, "joint-pair", "n=2 joint sampler always accepts", joint_pair},
        {9, "triangle", "joint vs mixture vs matrix eigenvalues, n in {2,3,4}", triangle},
        {10, "beta", "beta generalization", beta_generalization},
        {11, "vandermonde", "closed-form Vandermonde maxima", vandermonde},
    };
    return list;
}

std::vector<CriterionResult> run_suite(std::string_view suite, const Options& options)
{
    std::vector<const Criterion*> selected;
    const std::string s = lower_copy(suite);
    if (s == "all") {
        for (const auto& c : criteria()) {
            selected.push_back(&c);
        }
    } else {
        std::size_t start = 0;
        while (start <= s.size()) {
            const std::size_t comma = std::min(s.find(',', start), s.size());
            const std::string token = s.substr(start, comma - start);
            if (!token.empty()) {
                const Criterion* c = &find_criterion(token);
                if (std::find(selected.begin(), selected.end(), c) == selected.end()) {
                    selected.push_back(c);
                }
            }
            start = comma + 1;
        }
        if (selected.empty()) {
            throw ParameterError("empty verify suite");
        }
    }

    std::vector<CriterionResult> results;
    for (const Criterion* c : selected) {
        log_line(options, fmt("criterion %d (%s): %s", c->id, std::string(c->name).c_str(),
                              std::string(c->summary).c_str()));
        const auto started = std::chrono::steady_clock::now();
        CriterionResult r;
        r.id = c->id;
        r.name = std::string(c->name);
        r.checks = c->run(options);
        r.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        for (const auto& check : r.checks) {
            std::string bound = check.relation == Relation::within
                                    ? fmt("[%g, %g]", check.threshold_low, check.threshold)
                                    : fmt("%g", check.threshold);
            log_line(options, fmt("  %s %s: %.6g %s ", check.pass ? "ok  " : "FAIL",
                                  check.test.c_str(), check.statistic,
                                  std::string(relation_name(check.relation)).c_str())
                                  + bound + " (" + check.detail + ")");
        }
        results.push_back(std::move(r));
    }
    return results;
}

std::string to_json(const std::vector<CriterionResult>& results, const Options& options)
{
    nlohmann::json report;
    report["seed"] = options.seed;
    report["quick"] = options.quick;
    bool all_pass = true;
    nlohmann::json list = nlohmann::json::array();
    for (const auto& r : results) {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& c : r.checks) {
            nlohmann::json j;
            j["test"] = c.test;
            j["statistic"] = c.statistic;
            if (c.relation == Relation::within) {
                j["threshold"] = nlohmann::json::array({c.threshold_low, c.threshold});
            } else {
                j["threshold"] = c.threshold;
            }
            j["relation"] = relation_name(c.relation);
            j["pass"] = c.pass;
            j["detail"] = c.detail;
            checks.push_back(std::move(j));
        }
        all_pass = all_pass && r.pass();
        list.push_back({{"criterion", r.id},
                        {"name", r.name},
                        {"pass", r.pass()},
                        {"seconds", r.seconds},
                        {"checks", std::move(checks)}});
    }
    report["criteria"] = std::move(list);
    report["pass"] = all_pass;
    return report.dump(2);
}

}  // namespace gue::verify
