#pragma once

#include <functional>
#include <vector>

namespace arcwalk {

struct quadrature_config {
    double abs_tol = 1e-11;
    double rel_tol = 1e-11;
    int max_subdivisions = 4000;
    // Clip distance from 0 and 1 used by the clipped-endpoint fallback for
    // integrable endpoint blowups; must lie in (0, 1e-6].
    double endpoint_offset = 1e-10;
};

struct quadrature_result {
    double value = 0.0;
    double error_estimate = 0.0;
    int subdivisions = 0;
    bool converged = true;
};

using integrand = std::function<double(double)>;

// Adaptive Gauss-Kronrod (7,15) over [a,b]: repeatedly bisects the interval
// with the largest error estimate until the total estimate meets
// max(abs_tol, rel_tol*|value|) or max_subdivisions is exhausted.
quadrature_result integrate(const integrand& f, double a, double b,
                            const quadrature_config& cfg = {});

// Same, but the domain is pre-split at the given interior breakpoints
// (useful when the integrand is only piecewise smooth).
quadrature_result integrate_split(const integrand& f, double a, double b,
                                  std::vector<double> breaks,
                                  const quadrature_config& cfg = {});

/**
 * Integral of f over a sub-segment of (0,1) under the substitution
 * s = sin^2(theta). Integrands with inverse-square-root endpoint behaviour
 * become bounded in theta, and the Gauss-Kronrod nodes are interior, so f is
 * never evaluated at an exact endpoint. Optional breaks are mapped to theta.
 */
quadrature_result integrate_arcsine_segment(const integrand& f, double s_lo, double s_hi,
                                            std::vector<double> breaks = {},
                                            const quadrature_config& cfg = {});

// Convenience: the full unit interval.
quadrature_result integrate_unit_arcsine(const integrand& f,
                                         std::vector<double> breaks = {},
                                         const quadrature_config& cfg = {});

/**
 * Generic fallback for the same integrand class: clip the domain to
 * [d, 1-d] with d = cfg.endpoint_offset and remove the O(sqrt(d)) endpoint
 * deficit by Richardson extrapolation with exponent 1/2 against a second
 * pass at 4d:  I ~= 2*I(d) - I(4d).
 */
quadrature_result integrate_unit_clipped(const integrand& f,
                                         const quadrature_config& cfg = {});

} // namespace arcwalk
