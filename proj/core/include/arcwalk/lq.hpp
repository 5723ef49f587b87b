#pragma once

#include <stdexcept>

namespace arcwalk {

// One-step conditional law query: the chain sits at x in (0,1) and jumps
// with the exponent-p branch weights; q is the deviation exponent.
struct lq_query {
    double p = 0.0;
    double q = 2.0;
    double x = 0.5;
};

enum class critical_point { minimum, inflection, maximum };

// Thrown when the probe scales of classify_critical_point disagree on the
// verdict (the sign pattern of f(x+-delta) - f(x) changes inside the ladder).
class undetermined_classification : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// f(z) = E|z - X|^q under the one-step law from x: a mixture of uniform(0,x)
// (weight x^p/(x^p+(1-x)^p)) and uniform(x,1). Closed-form piecewise
// antiderivatives |z-u|^(q+1)/(q+1); no quadrature.
double lq_objective(const lq_query& query, double z);

// f'(x) in closed form: (x^(p+q-1) - (1-x)^(p+q-1)) / (x^p + (1-x)^p).
// Vanishes identically when p = 1 - q.
double lq_derivative_at_x(const lq_query& query);

// argmin of lq_objective over [0,1] by golden-section search; requires the
// convex regime q >= 1. For q = 1 the one-step density is bounded below, so
// the median (the unique minimizer) is returned.
double lq_minimizer(const lq_query& query, double tol = 1e-8);

/**
 * Classifies the critical point z = x (requires |f'(x)| <= 1e-9) from the
 * sign pattern of f(x+-delta) - f(x) over the fixed probe ladder
 * delta in {1e-2, 1e-3, 1e-4}: both sides above f(x) means minimum, one
 * above and one below means inflection, both below means maximum. All three
 * scales must agree; otherwise undetermined_classification is thrown.
 */
critical_point classify_critical_point(const lq_query& query);

} // namespace arcwalk
