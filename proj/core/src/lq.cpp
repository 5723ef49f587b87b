#include "arcwalk/lq.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "arcwalk/optimize.hpp"
#include "arcwalk/walk.hpp"

namespace arcwalk {
namespace {

void validate(const lq_query& query) {
    if (!std::isfinite(query.p))
        throw std::domain_error("lq_query: p must be finite");
    if (!(query.q > 0.0))
        throw std::domain_error("lq_query: requires q > 0");
    if (!(query.x > 0.0 && query.x < 1.0))
        throw std::domain_error("lq_query: x must lie strictly inside (0,1)");
}

// Integral of |z - u|^q over [lo, hi], lo <= hi.
double segment_moment(double z, double lo, double hi, double q) {
    const double e = q + 1.0;
    if (hi <= z) return (std::pow(z - lo, e) - std::pow(z - hi, e)) / e;
    if (lo >= z) return (std::pow(hi - z, e) - std::pow(lo - z, e)) / e;
    return (std::pow(z - lo, e) + std::pow(hi - z, e)) / e;
}

const char* verdict_name(critical_point v) {
    switch (v) {
        case critical_point::minimum: return "minimum";
        case critical_point::inflection: return "inflection";
        case critical_point::maximum: return "maximum";
    }
    return "unknown";
}

} // namespace

double lq_objective(const lq_query& query, double z) {
    validate(query);
    if (!std::isfinite(z))
        throw std::domain_error("lq_objective: z must be finite");
    const double x = query.x;
    const double w0 = branch_weight(x, query.p);
    const double left_height = w0 / x;
    const double right_height = (1.0 - w0) / (1.0 - x);
    return left_height * segment_moment(z, 0.0, x, query.q) +
           right_height * segment_moment(z, x, 1.0, query.q);
}

double lq_derivative_at_x(const lq_query& query) {
    validate(query);
    const double x = query.x;
    const double w0 = branch_weight(x, query.p);
    return w0 * std::pow(x, query.q - 1.0) -
           (1.0 - w0) * std::pow(1.0 - x, query.q - 1.0);
}

double lq_minimizer(const lq_query& query, double tol) {
    validate(query);
    if (!(query.q >= 1.0))
        throw std::domain_error("lq_minimizer: requires q >= 1");
    auto f = [&query](double z) { return lq_objective(query, z); };
    const scalar_min_result r = golden_section_min(f, 0.0, 1.0, tol);
    if (!r.converged)
        throw std::runtime_error("lq_minimizer: golden section search did not converge");
    return r.x;
}

critical_point classify_critical_point(const lq_query& query) {
    validate(query);
    const double slope = lq_derivative_at_x(query);
    if (!(std::abs(slope) <= 1e-9))
        throw std::domain_error("classify_critical_point: x is not a critical point "
                                "(one-sided slope " + std::to_string(slope) + ")");
    constexpr std::array<double, 3> deltas{1e-2, 1e-3, 1e-4};
    const double fx = lq_objective(query, query.x);
    bool have_verdict = false;
    bool consistent = true;
    critical_point verdict{};
    std::ostringstream trail;
    for (double delta : deltas) {
        if (query.x - delta <= 0.0 || query.x + delta >= 1.0)
            throw std::domain_error("classify_critical_point: probe offsets leave [0,1]");
        const double up = lq_objective(query, query.x + delta) - fx;
        const double down = lq_objective(query, query.x - delta) - fx;
        critical_point local;
        if (up > 0.0 && down > 0.0) {
            local = critical_point::minimum;
        } else if (up < 0.0 && down < 0.0) {
            local = critical_point::maximum;
        } else if ((up > 0.0 && down < 0.0) || (up < 0.0 && down > 0.0)) {
            local = critical_point::inflection;
        } else {
            trail << " delta=" << delta << " -> flat;";
            consistent = false;
            continue;
        }
        trail << " delta=" << delta << " -> " << verdict_name(local) << ";";
        if (!have_verdict) {
            verdict = local;
            have_verdict = true;
        } else if (local != verdict) {
            consistent = false;
        }
    }
    if (!have_verdict || !consistent)
        throw undetermined_classification("probe verdicts disagree across offsets:" + trail.str());
    return verdict;
}

} // namespace arcwalk
