// gue: command-line front end for the GUE eigenvalue samplers.
//
// Exit codes: 0 success, 1 invalid parameters, 2 budget or numerical
// failure, 3 a verification criterion failed.

#include "gue/dominator.hpp"
#include "gue/errors.hpp"
#include "gue/hermite.hpp"
#include "gue/joint.hpp"
#include "gue/oracle.hpp"
#include "gue/rng.hpp"
#include "gue/samplers.hpp"
#include "gue/stats.hpp"
#include "gue/vanveen.hpp"
#include "gue/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace gue;

constexpr int kExitOk = 0;
constexpr int kExitParameter = 1;
constexpr int kExitBudget = 2;
constexpr int kExitVerifyFailed = 3;

struct Output {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    explicit Output(const std::string& path)
    {
        if (!path.empty()) {
            file.open(path);
            if (!file) {
                throw ParameterError("cannot open output file '" + path + "'");
            }
            stream = &file;
        }
    }
    std::ostream& operator*() { return *stream; }
};

void set_precision(std::ostream& os)
{
    os.precision(17);
}

std::uint64_t seed_from(const std::string& text)
{
    return parse_seed(text);
}

// Worker w draws from stream 0 = RandomStream(seed), others derived.
RandomStream worker_stream(std::uint64_t seed, unsigned worker)
{
    return worker == 0 ? RandomStream(seed) : RandomStream::derive(seed, worker);
}

std::vector<std::size_t> split(std::size_t count, unsigned workers)
{
    std::vector<std::size_t> sizes(workers, count / workers);
    for (std::size_t i = 0; i < count % workers; ++i) {
        ++sizes[i];
    }
    return sizes;
}

std::vector<std::uint64_t> parse_list(const std::string& text)
{
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            continue;
        }
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || !(v >= 1.0) || v != std::floor(v) || v > 1e12) {
            throw ParameterError("bad entry '" + item + "' in n list");
        }
        out.push_back(static_cast<std::uint64_t>(v));
    }
    if (out.empty()) {
        throw ParameterError("n list is empty");
    }
    return out;
}

void require(bool ok, const std::string& reason)
{
    if (!ok) {
        throw ParameterError(reason);
    }
}

nlohmann::json stats_json(const SamplerStats& s)
{
    return {{"proposals", s.proposals},
            {"accepted", s.accepted},
            {"exact_evals", s.exact_evals},
            {"squeeze_lower_accepts", s.squeeze_lower_accepts},
            {"squeeze_upper_rejects", s.squeeze_upper_rejects},
            {"elapsed_ns", s.elapsed.count()}};
}

// ---- sample ---------------------------------------------------------------

struct SampleArgs {
    std::uint64_t n = 0;
    std::optional<std::uint64_t> k;
    std::size_t count = 1;
    std::string mode = "squeeze";
    std::string seed;
    std::string format = "csv";
    std::string out;
    unsigned workers = 1;
    std::string convention = "unscaled";
    std::uint64_t max_proposals = kDefaultMaxProposals;
    bool stats = false;
};

int run_sample(const SampleArgs& a)
{
    const SamplerMode mode = parse_sampler_mode(a.mode);
    const Convention convention = parse_convention(a.convention);
    const std::uint64_t seed = seed_from(a.seed);
    require(a.n >= 1, "--n must be at least 1");
    require(!a.k || *a.k < a.n, "--k must be below --n");
    require(a.workers >= 1, "--workers must be at least 1");
    require(a.format == "csv" || a.format == "json", "--format must be csv or json");
    require(a.max_proposals >= 1, "--max-proposals must be at least 1");

    const double scale = convention_scale(convention, a.n);
    const auto sizes = split(a.count, a.workers);
    std::vector<std::vector<double>> batches(a.workers);
    std::vector<SamplerStats> stats(a.workers);
    std::vector<std::exception_ptr> errors(a.workers);

    auto work = [&](unsigned w) {
        try {
            RandomStream stream = worker_stream(seed, w);
            if (a.k) {
                const PhiSquaredSampler sampler(*a.k, mode, a.max_proposals);
                batches[w] = sample_batch(sampler, sizes[w], stream, stats[w]);
            } else {
                const GueEigenvalueSampler sampler(a.n, mode, a.max_proposals);
                batches[w] = sample_batch(sampler, sizes[w], stream, stats[w]);
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (a.workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> threads;
        for (unsigned w = 0; w < a.workers; ++w) {
            threads.emplace_back(work, w);
        }
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }

    SamplerStats total;
    for (const auto& s : stats) {
        total += s;
    }
    Output out(a.out);
    set_precision(*out);
    if (a.format == "csv") {
        *out << "index,value\n";
        std::size_t index = 0;
        for (const auto& batch : batches) {
            for (double v : batch) {
                *out << index++ << ',' << v * scale << '\n';
            }
        }
    } else {
        nlohmann::json values = nlohmann::json::array();
        for (const auto& batch : batches) {
            for (double v : batch) {
                values.push_back(v * scale);
            }
        }
        nlohmann::json doc{{"n", a.n},
                           {"mode", to_string(mode)},
                           {"seed", seed},
                           {"workers", a.workers},
                           {"convention", to_string(convention)},
                           {"samples", std::move(values)},
                           {"stats", stats_json(total)}};
        if (a.k) {
            doc["k"] = *a.k;
        }
        *out << doc.dump(2) << '\n';
    }
    if (a.stats) {
        std::cerr << "proposals=" << total.proposals << " accepted=" << total.accepted
                  << " exact_evals=" << total.exact_evals
                  << " lower_accepts=" << total.squeeze_lower_accepts
                  << " upper_rejects=" << total.squeeze_upper_rejects << '\n';
    }
    return kExitOk;
}

// ---- sample-joint -----------------------------------------------------------

struct JointArgs {
    std::uint64_t n = 0;
    double beta = 2.0;
    std::size_t count = 1;
    std::string seed;
    std::uint64_t max_attempts = kDefaultMaxAttempts;
    unsigned workers = 1;
    std::string convention = "unscaled";
    std::string out;
    bool quiet = false;
};

// Workers race on their own streams; the first acceptance wins. Attempts
// count the proposals made by all workers for that sample.
JointSample race_joint(const JointArgs& a, std::vector<RandomStream>& streams)
{
    std::atomic<bool> done{false};
    std::atomic<std::uint64_t> attempts{0};
    std::mutex winner_mutex;
    std::optional<JointSample> winner;
    std::vector<std::exception_ptr> errors(streams.size());

    auto work = [&](unsigned w) {
        try {
            RandomStream& stream = streams[w];
            while (!done.load(std::memory_order_relaxed)) {
                const std::uint64_t made = attempts.fetch_add(1) + 1;
                if (made > a.max_attempts) {
                    done = true;
                    return;
                }
                JointProposal p = a.beta == 2.0 ? propose_gue(a.n, stream)
                                                : propose(a.n, a.beta, stream);
                if (accept_test(p, stream)) {
                    std::lock_guard lock(winner_mutex);
                    if (!winner) {
                        winner = JointSample{a.n, a.beta, std::move(p.values), 0};
                        done = true;
                    }
                    return;
                }
                if (!a.quiet && w == 0 && made % kProgressInterval == 0) {
                    std::cerr << "sample-joint: " << made << " attempts so far\n";
                }
            }
        } catch (...) {
            errors[w] = std::current_exception();
            done = true;
        }
    };
    {
        std::vector<std::jthread> threads;
        for (unsigned w = 0; w < streams.size(); ++w) {
            threads.emplace_back(work, w);
        }
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    if (!winner) {
        throw BudgetError("joint sampler exceeded " + std::to_string(a.max_attempts) + " attempts",
                          a.max_attempts);
    }
    winner->attempts = std::min(attempts.load(), a.max_attempts);
    return std::move(*winner);
}

int run_sample_joint(const JointArgs& a)
{
    const std::uint64_t seed = seed_from(a.seed);
    const Convention convention = parse_convention(a.convention);
    require(a.n >= 2, "--n must be at least 2");
    require(a.beta > 0.0 && std::isfinite(a.beta), "--beta must be positive");
    require(a.max_attempts >= 1, "--max-attempts must be at least 1");
    require(a.workers >= 1, "--workers must be at least 1");

    const double scale = convention_scale(convention, a.n);
    std::vector<JointSample> samples;
    samples.reserve(a.count);
    if (a.workers == 1) {
        RandomStream stream(seed);
        ProgressCallback progress;
        if (!a.quiet) {
            progress = [](std::uint64_t attempts) {
                std::cerr << "sample-joint: " << attempts << " attempts so far\n";
            };
        }
        for (std::size_t i = 0; i < a.count; ++i) {
            samples.push_back(a.beta == 2.0
                                  ? sample_joint(a.n, stream, a.max_attempts, progress)
                                  : sample_joint_beta(a.n, a.beta, stream, a.max_attempts,
                                                      progress));
        }
    } else {
        std::vector<RandomStream> streams;
        for (unsigned w = 0; w < a.workers; ++w) {
            streams.push_back(worker_stream(seed, w));
        }
        for (std::size_t i = 0; i < a.count; ++i) {
            samples.push_back(race_joint(a, streams));
        }
    }

    Output out(a.out);
    set_precision(*out);
    *out << "index,attempts";
    for (std::uint64_t j = 1; j <= a.n; ++j) {
        *out << ",x" << j;
    }
    *out << '\n';
    for (std::size_t i = 0; i < samples.size(); ++i) {
        *out << i << ',' << samples[i].attempts;
        for (double v : samples[i].values) {
            *out << ',' << v * scale;
        }
        *out << '\n';
    }
    return kExitOk;
}

// ---- bench ----------------------------------------------------------------

struct BenchArgs {
    std::string mode = "squeeze";
    std::string n_list = "100,1000,10000,100000";
    std::uint64_t samples = 10000;
    std::string seed = "1";
    std::string out;
};

int run_bench(const BenchArgs& a)
{
    const SamplerMode mode = parse_sampler_mode(a.mode);
    const auto ns = parse_list(a.n_list);
    const std::uint64_t seed = seed_from(a.seed);
    require(a.samples >= 1, "--samples must be at least 1");

    Output out(a.out);
    *out << "mode,n,samples,proposals_per_sample,exact_evals_per_sample,exact_cost_share,"
            "cost_proxy,ns_per_sample\n";
    std::vector<std::pair<double, double>> cost;
    std::vector<std::pair<double, double>> exact;
    for (auto n : ns) {
        const auto r = benchmark_one(mode, n, a.samples, seed);
        *out << to_string(mode) << ',' << r.n << ',' << r.samples << ',' << r.proposals_per_sample
             << ',' << r.exact_evals_per_sample << ',' << r.exact_cost_share << ','
             << r.cost_proxy << ',' << r.ns_per_sample << '\n';
        out.stream->flush();
        cost.emplace_back(static_cast<double>(n), r.cost_proxy);
        exact.emplace_back(static_cast<double>(n), r.exact_evals_per_sample);
    }
    if (ns.size() >= 3) {
        const auto fc = loglog_slope(cost);
        const auto fe = loglog_slope(exact);
        std::cerr << "cost proxy slope " << fc.slope << " (stderr " << fc.stderr_slope
                  << "), exact evals per sample slope " << fe.slope << " (stderr "
                  << fe.stderr_slope << ")\n";
    }
    return kExitOk;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
    std::string suite = "all";
    bool quick = false;
    std::string seed;
    std::string out;
    bool quiet = false;
};

int run_verify(const VerifyArgs& a)
{
    verify::Options options;
    options.quick = a.quick;
    if (!a.seed.empty()) {
        options.seed = seed_from(a.seed);
    }
    options.log = a.quiet ? nullptr : &std::cerr;
    const auto results = verify::run_suite(a.suite, options);
    Output out(a.out);
    *out << verify::to_json(results, options) << '\n';
    bool pass = true;
    for (const auto& r : results) {
        std::cerr << '[' << (r.pass() ? "PASS" : "FAIL") << "] criterion " << r.id << ' '
                  << r.name << '\n';
        pass = pass && r.pass();
    }
    return pass ? kExitOk : kExitVerifyFailed;
}

// ---- tabulation -----------------------------------------------------------

struct TabulateArgs {
    std::uint64_t n = 0;
    std::size_t points = 2001;
    double x_max = 0.0;  // 0 selects the default range
    bool full = false;
    std::string out;
};

std::vector<double> grid(double lo, double hi, std::size_t points)
{
    std::vector<double> xs(points);
    for (std::size_t i = 0; i < points; ++i) {
        xs[i] = points == 1 ? lo
                            : lo + (hi - lo) * static_cast<double>(i)
                                       / static_cast<double>(points - 1);
    }
    return xs;
}

int run_tabulate_envelope(const TabulateArgs& a)
{
    require(a.n >= 1, "--n must be at least 1");
    require(a.points >= 2, "--points must be at least 2");
    require(a.x_max >= 0.0, "--x-max must be nonnegative");
    const auto spec = make_dominator(a.n);
    const double reach = a.x_max > 0.0 ? a.x_max : spec.x2 + 2.0 * spec.tail_scale;
    const PhiSquaredEvaluator eval(a.n);
    Output out(a.out);
    set_precision(*out);
    *out << "x,h_n,phi_sq\n";
    for (double x : grid(-reach, reach, a.points)) {
        *out << x << ',' << envelope(spec, x) << ',' << eval.phi_sq(a.n, x) << '\n';
    }
    return kExitOk;
}

int run_tabulate_squeeze(const TabulateArgs& a)
{
    require(a.n >= 1, "--n must be at least 1");
    require(a.points >= 2, "--points must be at least 2");
    const auto spec = make_dominator(a.n);
    const double limit = vanveen_domain_limit(a.n);
    require(a.x_max >= 0.0 && a.x_max <= limit,
            "--x-max must lie in [0, " + std::to_string(limit) + "]");
    const double reach = a.x_max > 0.0 ? a.x_max : spec.x1;
    const PhiSquaredEvaluator eval(a.n);
    Output out(a.out);
    set_precision(*out);
    *out << (a.full ? "x,phi_sq,f_n,lower,upper,h_n\n" : "x,lower,phi_sq,upper\n");
    for (double x : grid(-reach, reach, a.points)) {
        const double phi = eval.phi_sq(a.n, x);
        const auto b = squeeze_bounds(spec, x);
        if (a.full) {
            *out << x << ',' << phi << ',' << vanveen_approximation(a.n, x) << ',' << b.lower
                 << ',' << b.upper << ',' << envelope(spec, x) << '\n';
        } else {
            *out << x << ',' << b.lower << ',' << phi << ',' << b.upper << '\n';
        }
    }
    return kExitOk;
}

// ---- oracle ---------------------------------------------------------------

struct OracleArgs {
    std::uint64_t n = 0;
    std::size_t count = 1;
    std::string seed;
    std::string convention = "unscaled";
    std::string out;
};

int run_oracle(const OracleArgs& a)
{
    const std::uint64_t seed = seed_from(a.seed);
    const Convention convention = parse_convention(a.convention);
    require(a.n >= 1 && a.n <= kMaxOracleSize,
            "--n must lie in [1, " + std::to_string(kMaxOracleSize) + "]");
    RandomStream stream(seed);
    Output out(a.out);
    set_precision(*out);
    *out << "index";
    for (std::uint64_t j = 1; j <= a.n; ++j) {
        *out << ",x" << j;
    }
    *out << '\n';
    for (std::size_t i = 0; i < a.count; ++i) {
        const auto ev = eigenvalues_small(sample_gue_matrix(a.n, convention, stream));
        *out << i;
        for (double v : ev) {
            *out << ',' << v;
        }
        *out << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact samplers for eigenvalues of the Gaussian unitary ensemble"};
    app.require_subcommand(1);

    const auto mode_check = CLI::IsMember({"plain", "squeeze"});
    const auto convention_check = CLI::IsMember({"unscaled", "intro"});

    SampleArgs sample;
    auto* s = app.add_subcommand("sample", "Draw one uniformly chosen eigenvalue (or phi_k^2 draws)");
    s->add_option("--n", sample.n, "Matrix size")->required()->check(CLI::PositiveNumber);
    s->add_option("--k", sample.k, "Sample phi_k^2 instead of the mixture (k < n)");
    s->add_option("--count", sample.count, "Number of samples")->default_val(1);
    s->add_option("--mode", sample.mode, "Rejection variant")->check(mode_check)
        ->default_val("squeeze");
    s->add_option("--seed", sample.seed, "Seed, decimal or 0x-hex")->required();
    s->add_option("--format", sample.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))->default_val("csv");
    s->add_option("--out", sample.out, "Output file (default stdout)");
    s->add_option("--workers", sample.workers, "Worker threads")->default_val(1);
    s->add_option("--convention", sample.convention, "Eigenvalue scaling")
        ->check(convention_check)->default_val("unscaled");
    s->add_option("--max-proposals", sample.max_proposals, "Proposal budget per sample")
        ->default_val(kDefaultMaxProposals);
    s->add_flag("--stats", sample.stats, "Print sampler counters to stderr");

    JointArgs joint;
    auto* j = app.add_subcommand("sample-joint", "Draw the full ordered spectrum by rejection");
    j->add_option("--n", joint.n, "Matrix size (>= 2)")->required();
    j->add_option("--beta", joint.beta, "Ensemble parameter")->default_val(2.0);
    j->add_option("--count", joint.count, "Number of spectra")->default_val(1);
    j->add_option("--seed", joint.seed, "Seed, decimal or 0x-hex")->required();
    j->add_option("--max-attempts", joint.max_attempts, "Attempt budget per spectrum")
        ->default_val(kDefaultMaxAttempts);
    j->add_option("--workers", joint.workers,
                  "Racing worker threads (results are reproducible only with 1)")
        ->default_val(1);
    j->add_option("--convention", joint.convention, "Eigenvalue scaling")
        ->check(convention_check)->default_val("unscaled");
    j->add_option("--out", joint.out, "Output file (default stdout)");
    j->add_flag("--quiet", joint.quiet, "Suppress progress reports");

    BenchArgs bench;
    auto* b = app.add_subcommand("bench", "Benchmark the phi_n^2 sampler across n");
    b->add_option("--mode", bench.mode, "Rejection variant")->check(mode_check)
        ->default_val("squeeze");
    b->add_option("--n-list", bench.n_list, "Comma-separated n values")
        ->default_val("100,1000,10000,100000");
    b->add_option("--samples", bench.samples, "Samples per n")->default_val(10000);
    b->add_option("--seed", bench.seed, "Seed, decimal or 0x-hex")->default_val("1");
    b->add_option("--out", bench.out, "Output file (default stdout)");

    VerifyArgs ver;
    auto* v = app.add_subcommand("verify", "Run acceptance criteria and print a JSON report");
    v->add_option("--suite", ver.suite, "all, a criterion number, or a comma list")
        ->default_val("all");
    v->add_flag("--quick", ver.quick, "Reduced sample counts");
    v->add_option("--seed", ver.seed, "Seed, decimal or 0x-hex");
    v->add_option("--out", ver.out, "Report file (default stdout)");
    v->add_flag("--quiet", ver.quiet, "No progress on stderr");

    TabulateArgs env;
    auto* te = app.add_subcommand("tabulate-envelope", "CSV of x, h_n, phi_n^2");
    te->add_option("--n", env.n, "Index n")->required();
    te->add_option("--points", env.points, "Grid points")->default_val(2001);
    te->add_option("--x-max", env.x_max, "Half-width of the grid");
    te->add_option("--out", env.out, "Output file (default stdout)");

    TabulateArgs sq;
    auto* ts = app.add_subcommand("tabulate-squeeze", "CSV of x, lower, phi_n^2, upper");
    ts->add_option("--n", sq.n, "Index n")->required();
    ts->add_option("--points", sq.points, "Grid points")->default_val(2001);
    ts->add_option("--x-max", sq.x_max, "Half-width of the grid (default x1)");
    ts->add_flag("--full", sq.full, "Columns x, phi_sq, f_n, lower, upper, h_n");
    ts->add_option("--out", sq.out, "Output file (default stdout)");

    OracleArgs orc;
    auto* o = app.add_subcommand("oracle", "Spectra of entrywise-sampled GUE matrices");
    o->add_option("--n", orc.n, "Matrix size")->required();
    o->add_option("--count", orc.count, "Number of matrices")->default_val(1);
    o->add_option("--seed", orc.seed, "Seed, decimal or 0x-hex")->required();
    o->add_option("--convention", orc.convention, "Eigenvalue scaling")
        ->check(convention_check)->default_val("unscaled");
    o->add_option("--out", orc.out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParameter;
    }

    try {
        if (*s) {
            return run_sample(sample);
        }
        if (*j) {
            return run_sample_joint(joint);
        }
        if (*b) {
            return run_bench(bench);
        }
        if (*v) {
            return run_verify(ver);
        }
        if (*te) {
            return run_tabulate_envelope(env);
        }
        if (*ts) {
            return run_tabulate_squeeze(sq);
        }
        if (*o) {
            return run_oracle(orc);
        }
    } catch (const ParameterError& e) {
        std::cerr << "gue: " << e.what() << '\n';
        return kExitParameter;
    } catch (const DomainError& e) {
        std::cerr << "gue: " << e.what() << '\n';
        return kExitParameter;
    } catch (const BudgetError& e) {
        std::cerr << "gue: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "gue: " << e.what() << '\n';
        return kExitBudget;
    }
    return kExitParameter;
}
