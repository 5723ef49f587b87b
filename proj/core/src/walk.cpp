#include "arcwalk/walk.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace arcwalk {
namespace {

void require_interior(double v, const char* what) {
    if (!(v > 0.0 && v < 1.0))
        throw std::domain_error(std::string(what) + " must lie strictly inside (0,1)");
}

bool is_absorbing(const walk_params& params) {
    return params.variant == walk_variant::p_absorbing;
}

double effective_p(const walk_params& params) {
    switch (params.variant) {
        case walk_variant::x:
        case walk_variant::y:
            return 0.0;
        default:
            return params.p;
    }
}

void validate_params(const walk_params& params) {
    if (params.variant == walk_variant::p_family && !std::isfinite(params.p))
        throw std::domain_error("p_family requires a finite exponent p");
    if (params.variant == walk_variant::p_absorbing && !(params.p < 0.0))
        throw std::domain_error("p_absorbing requires p < 0");
}

} // namespace

double kernel_x(double a, double b) {
    require_interior(a, "kernel_x: a");
    require_interior(b, "kernel_x: b");
    // diagonal assigned to the a < b branch for totality
    return a <= b ? 1.0 / (2.0 * b) : 1.0 / (2.0 * (1.0 - b));
}

double kernel_y(double a, double b) {
    require_interior(a, "kernel_y: a");
    require_interior(b, "kernel_y: b");
    double v = 0.0;
    if (a <= b) v += 1.0 / (2.0 * b);        // uniform(0,b) branch
    if (a > 1.0 - b) v += 1.0 / (2.0 * b);   // uniform(1-b,1) branch
    return v;
}

double kernel_p(double s, double x, double p) {
    require_interior(s, "kernel_p: s");
    require_interior(x, "kernel_p: x");
    if (!std::isfinite(p)) throw std::domain_error("kernel_p: p must be finite");
    const double la = p * std::log(x);
    const double lb = p * std::log1p(-x);
    const double m = std::max(la, lb);
    const double log_den = m + std::log(std::exp(la - m) + std::exp(lb - m));
    const double log_num = (p - 1.0) * (s <= x ? std::log(x) : std::log1p(-x));
    return std::exp(log_num - log_den);
}

double branch_weight(double x, double p) {
    require_interior(x, "branch_weight: x");
    if (!std::isfinite(p)) throw std::domain_error("branch_weight: p must be finite");
    const double t = p * (std::log1p(-x) - std::log(x));
    if (t > 700.0) return 0.0;
    return 1.0 / (1.0 + std::exp(t));
}

double step(double x, const walk_params& params, rng& stream) {
    validate_params(params);
    if (is_absorbing(params) && (x == 0.0 || x == 1.0)) return x;
    require_interior(x, "step: x");

    const double w0 = branch_weight(x, effective_p(params));
    const double u_branch = stream.uniform();
    const double u_pos = stream.uniform_open();
    if (u_branch < w0) return x * u_pos; // uniform on (0,x)
    if (params.variant == walk_variant::y)
        return (1.0 - x) + x * u_pos;     // uniform on (1-x,1)
    return x + (1.0 - x) * u_pos;         // uniform on (x,1)
}

chain_trace simulate(const walk_params& params, double x0, std::size_t n_steps,
                     std::size_t burn_in, std::size_t thinning, std::uint64_t seed) {
    validate_params(params);
    if (n_steps < 1) throw std::domain_error("simulate: n_steps must be >= 1");
    if (thinning < 1) throw std::domain_error("simulate: thinning must be >= 1");

    chain_trace trace;
    trace.params = params;
    trace.seed = seed;
    trace.burn_in = burn_in;
    trace.thinning = thinning;
    trace.states.reserve(n_steps);

    rng stream(seed);
    double x = x0;
    for (std::size_t i = 0; i < burn_in; ++i) x = step(x, params, stream);
    for (std::size_t i = 0; i < n_steps; ++i) {
        for (std::size_t j = 0; j < thinning; ++j) x = step(x, params, stream);
        trace.states.push_back(x);
    }
    return trace;
}

} // namespace arcwalk
