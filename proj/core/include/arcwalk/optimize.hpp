#pragma once

#include <functional>

namespace arcwalk {

struct scalar_min_result {
    double x = 0.0;
    double fx = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Golden-section search for the minimum of a unimodal f on [lo, hi] to
// absolute abscissa tolerance x_tol. Needs no derivatives or smoothness, so
// objectives with a kink at the minimizer are fine.
scalar_min_result golden_section_min(const std::function<double(double)>& f,
                                     double lo, double hi, double x_tol,
                                     int max_iterations = 200);

} // namespace arcwalk
