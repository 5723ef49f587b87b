#include "arcwalk/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace arcwalk {
namespace {

// Gauss-Kronrod (7,15) abscissae (positive half, descending) and weights.
constexpr double kron_nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kron_weights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
// Embedded 7-point Gauss weights for kron_nodes[1], [3], [5], [7].
constexpr double gauss_weights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct panel {
    double a = 0.0;
    double b = 0.0;
    double value = 0.0;
    double error = 0.0;
};

panel evaluate_panel(const integrand& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double resk = kron_weights[7] * fc;
    double resg = gauss_weights[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kron_nodes[j];
        const double f1 = f(c - dx);
        const double f2 = f(c + dx);
        resk += kron_weights[j] * (f1 + f2);
        if (j % 2 == 1) resg += gauss_weights[j / 2] * (f1 + f2);
    }
    // |K15 - G7| estimates the Gauss error, which dominates the Kronrod
    // error, so this is a conservative panel estimate.
    return panel{a, b, resk * h, std::abs(resk - resg) * h};
}

struct by_error {
    bool operator()(const panel& lhs, const panel& rhs) const {
        return lhs.error < rhs.error;
    }
};

quadrature_result run_adaptive(const integrand& f, std::vector<panel> initial,
                               const quadrature_config& cfg) {
    std::priority_queue<panel, std::vector<panel>, by_error> queue(
        by_error{}, std::move(initial));
    double value = 0.0;
    double error = 0.0;
    {
        std::priority_queue<panel, std::vector<panel>, by_error> copy = queue;
        while (!copy.empty()) {
            value += copy.top().value;
            error += copy.top().error;
            copy.pop();
        }
    }
    int splits = 0;
    quadrature_result out;
    while (error > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value))) {
        if (splits >= cfg.max_subdivisions || queue.empty()) {
            out.converged = false;
            break;
        }
        const panel worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b)) { // interval at rounding limit
            out.converged = false;
            break;
        }
        const panel left = evaluate_panel(f, worst.a, mid);
        const panel right = evaluate_panel(f, mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++splits;
    }
    out.value = value;
    out.error_estimate = error;
    out.subdivisions = splits;
    return out;
}

std::vector<double> clean_breaks(std::vector<double> breaks, double a, double b) {
    std::erase_if(breaks, [&](double t) { return !(t > a && t < b); });
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    return breaks;
}

} // namespace

quadrature_result integrate(const integrand& f, double a, double b,
                            const quadrature_config& cfg) {
    return integrate_split(f, a, b, {}, cfg);
}

quadrature_result integrate_split(const integrand& f, double a, double b,
                                  std::vector<double> breaks,
                                  const quadrature_config& cfg) {
    if (!(std::isfinite(a) && std::isfinite(b)))
        throw std::domain_error("integrate: endpoints must be finite");
    if (a == b) return {};
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    breaks = clean_breaks(std::move(breaks), a, b);
    std::vector<panel> initial;
    double lo = a;
    for (double t : breaks) {
        initial.push_back(evaluate_panel(f, lo, t));
        lo = t;
    }
    initial.push_back(evaluate_panel(f, lo, b));
    quadrature_result out = run_adaptive(f, std::move(initial), cfg);
    out.value *= sign;
    return out;
}

quadrature_result integrate_arcsine_segment(const integrand& f, double s_lo, double s_hi,
                                            std::vector<double> breaks,
                                            const quadrature_config& cfg) {
    if (!(0.0 <= s_lo && s_lo <= s_hi && s_hi <= 1.0))
        throw std::domain_error("integrate_arcsine_segment: need 0 <= s_lo <= s_hi <= 1");
    const double one_below = std::nextafter(1.0, 0.0);
    auto g = [&f, one_below](double theta) {
        double s = std::sin(theta);
        s *= s;
        s = std::clamp(s, std::numeric_limits<double>::min(), one_below);
        return f(s) * std::sin(2.0 * theta);
    };
    auto to_theta = [](double s) { return std::asin(std::sqrt(s)); };
    std::vector<double> theta_breaks;
    theta_breaks.reserve(breaks.size());
    for (double t : breaks)
        if (t > 0.0 && t < 1.0) theta_breaks.push_back(to_theta(t));
    return integrate_split(g, to_theta(s_lo), to_theta(s_hi),
                           std::move(theta_breaks), cfg);
}

quadrature_result integrate_unit_arcsine(const integrand& f,
                                         std::vector<double> breaks,
                                         const quadrature_config& cfg) {
    return integrate_arcsine_segment(f, 0.0, 1.0, std::move(breaks), cfg);
}

quadrature_result integrate_unit_clipped(const integrand& f,
                                         const quadrature_config& cfg) {
    const double d = cfg.endpoint_offset;
    if (!(d > 0.0 && d <= 1e-6))
        throw std::domain_error("integrate_unit_clipped: endpoint_offset must be in (0, 1e-6]");
    const quadrature_result fine = integrate(f, d, 1.0 - d, cfg);
    const quadrature_result coarse = integrate(f, 4.0 * d, 1.0 - 4.0 * d, cfg);
    quadrature_result out;
    out.value = 2.0 * fine.value - coarse.value;
    out.error_estimate = 2.0 * fine.error_estimate + coarse.error_estimate;
    out.subdivisions = fine.subdivisions + coarse.subdivisions;
    out.converged = fine.converged && coarse.converged;
    return out;
}

} // namespace arcwalk
