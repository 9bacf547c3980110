#include "gue/vanveen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "gue/errors.hpp"

namespace gue {

using std::numbers::pi;

double vanveen_domain_limit(std::uint64_t n)
{
    return 2.0 * std::sqrt(static_cast<double>(n) + 1.0) * (1.0 - 1e-12);
}

VanVeenTerms evaluate_vanveen(std::uint64_t n, double x)
{
    if (n == 0) {
        throw ParameterError("evaluate_vanveen: n must be at least 1");
    }
    const double ax = std::abs(x);
    if (!(ax <= vanveen_domain_limit(n))) {
        std::ostringstream msg;
        msg << "evaluate_vanveen: |x| = " << ax << " outside [0, 2 sqrt(n+1)) for n = " << n;
        throw DomainError(msg.str());
    }
    const double np1 = static_cast<double>(n) + 1.0;
    const double log_n_factorial = std::lgamma(np1);

    VanVeenTerms t;
    t.n = n;
    t.x = x;
    t.alpha = std::acos(ax / (2.0 * std::sqrt(np1)));
    const double s = std::sin(t.alpha);

    const double log_A = log_n_factorial - std::log(pi) + 0.5 * np1 + 0.25 * ax * ax
                         - 0.5 * static_cast<double>(n) * std::log(np1);
    t.log_prefactor = 2.0 * log_A - 0.5 * ax * ax - 0.5 * std::log(2.0 * pi)
                      - log_n_factorial;

    const double phase = 0.5 * np1 * (std::sin(2.0 * t.alpha) - 2.0 * t.alpha)
                         + 0.5 * t.alpha + 0.75 * pi;
    t.B_term = std::sqrt(pi / (np1 * s)) * std::sin(phase);
    t.R_term = 1.0 / (3.0 * np1 * s * s);

    const double prefactor = std::exp(t.log_prefactor);
    const double mu = kVanVeenMuBound;
    t.f = t.B_term * t.B_term * prefactor;
    t.eps_plus = prefactor
                 * (2.0 * mu * std::max(t.B_term, 0.0) * t.R_term
                    + mu * mu * t.R_term * t.R_term);
    t.eps_minus = prefactor * 2.0 * mu * std::abs(t.B_term * t.R_term);
    return t;
}

double vanveen_approximation(std::uint64_t n, double x)
{
    if (std::abs(x) > 2.0 * std::sqrt(static_cast<double>(n) + 1.0)) {
        return 0.0;
    }
    return evaluate_vanveen(n, x).f;
}

SqueezeBounds squeeze_bounds(const DominatorSpec& spec, double x)
{
    const VanVeenTerms t = evaluate_vanveen(spec.n, x);
    return {t.lower(), std::min(t.upper(), envelope(spec, x))};
}

double delta_eps(const DominatorSpec& spec, double x)
{
    const SqueezeBounds b = squeeze_bounds(spec, x);
    return b.upper - b.lower;
}

double delta_eps(std::uint64_t n, double x)
{
    return delta_eps(make_dominator(n), x);
}

}  // namespace gue
