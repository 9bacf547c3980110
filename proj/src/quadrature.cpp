#include "gue/quadrature.hpp"

#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

#include "gue/errors.hpp"

namespace gue {
namespace {

// Kronrod abscissae on [-1, 1], nonnegative half; odd indices are the
// 7-point Gauss nodes.
constexpr double kNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Interval {
    double a;
    double b;
    QuadratureResult result;
    bool operator<(const Interval& other) const
    {
        return result.error < other.result.error;
    }
};

}  // namespace

QuadratureResult gauss_kronrod_15(const Integrand& f, double a, double b)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kKronrodWeights[7];
    double gauss = fc * kGaussWeights[3];
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kNodes[i];
        const double pair = f(center - dx) + f(center + dx);
        kronrod += kKronrodWeights[i] * pair;
        if (i % 2 == 1) {
            gauss += kGaussWeights[i / 2] * pair;
        }
    }
    QuadratureResult r;
    r.value = kronrod * half;
    r.error = std::abs((kronrod - gauss) * half);
    r.intervals = 1;
    return r;
}

QuadratureResult integrate_adaptive(const Integrand& f,
                                    std::span<const double> breakpoints,
                                    double abs_tol, std::size_t max_intervals)
{
    if (!(abs_tol > 0.0)) {
        throw ParameterError("integrate_adaptive: tolerance must be positive");
    }
    if (breakpoints.size() < 2) {
        throw ParameterError("integrate_adaptive: need at least two breakpoints");
    }

    std::priority_queue<Interval> queue;
    double value = 0.0;
    double error = 0.0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        const double a = breakpoints[i];
        const double b = breakpoints[i + 1];
        if (!(b >= a)) {
            throw ParameterError("integrate_adaptive: breakpoints must be sorted");
        }
        if (b == a) {
            continue;
        }
        Interval iv{a, b, gauss_kronrod_15(f, a, b)};
        value += iv.result.value;
        error += iv.result.error;
        queue.push(iv);
    }

    while (error > abs_tol) {
        if (queue.size() >= max_intervals) {
            std::ostringstream msg;
            msg << "integrate_adaptive: error estimate " << error
                << " above tolerance " << abs_tol << " after " << queue.size()
                << " intervals";
            throw ConvergenceError(msg.str());
        }
        Interval worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            throw ConvergenceError("integrate_adaptive: interval underflow");
        }
        Interval left{worst.a, mid, gauss_kronrod_15(f, worst.a, mid)};
        Interval right{mid, worst.b, gauss_kronrod_15(f, mid, worst.b)};
        value += left.result.value + right.result.value - worst.result.value;
        error += left.result.error + right.result.error - worst.result.error;
        queue.push(left);
        queue.push(right);
    }

    // Re-sum to shed drift from the incremental updates.
    QuadratureResult total;
    total.intervals = queue.size();
    while (!queue.empty()) {
        total.value += queue.top().result.value;
        total.error += queue.top().result.error;
        queue.pop();
    }
    return total;
}

QuadratureResult integrate_adaptive(const Integrand& f, double a, double b,
                                    double abs_tol, std::size_t panels,
                                    std::size_t max_intervals)
{
    if (panels == 0) {
        panels = 1;
    }
    std::vector<double> points(panels + 1);
    for (std::size_t i = 0; i <= panels; ++i) {
        points[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(panels);
    }
    points.back() = b;
    return integrate_adaptive(f, points, abs_tol, max_intervals);
}

}  // namespace gue
