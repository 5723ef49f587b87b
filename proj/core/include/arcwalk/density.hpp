#pragma once

#include <functional>
#include <vector>

#include "arcwalk/quadrature.hpp"

namespace arcwalk {

// 1/(pi*sqrt(s(1-s))) on (0,1).
double rho_arcsine(double s);

// (2/pi)*asin(sqrt(s)) on [0,1].
double arcsine_cdf(double s);

// Inverse of arcsine_cdf: sin^2(pi*u/2).
double arcsine_quantile(double u);

// Power mean ((a^p+b^p)/2)^(1/p) for finite nonzero p, geometric mean for
// p = 0, max for p = +inf, min for p = -inf. Evaluated in log space.
double lp_mean(double a, double b, double p);

// Normalization z_p = integral over (0,1) of 1/lp_mean(s, 1-s, p), p > 0.
// Evaluated under the logit substitution u = log(s/(1-s)): the transformed
// integrand is bounded by sqrt(s(1-s)) <= exp(-|u|/2) uniformly in p, so a
// fixed truncation |u| <= 85 contributes < 2e-18 error for every p.
double z_p(double p, const quadrature_config& cfg = {});

// Stationary density 1/(z_p * lp_mean(s,1-s,p)) for p > 0; z_p is cached per
// exact-bits value of p (thread-safe).
double rho_p(double s, double p, const quadrature_config& cfg = {});

/**
 * Stationary density of the tilted walk with exponent p >= 0, with cached
 * normalization and CDF access. p = 0 dispatches to the closed-form arcsine
 * expressions; p > 0 uses quadrature (a cumulative cell table for the CDF).
 */
class density_model {
public:
    explicit density_model(double p, const quadrature_config& cfg = {});

    double p() const { return p_; }
    double normalization() const { return z_; }
    double pdf(double s) const;
    double cdf(double s) const;
    double quantile(double u) const; // bisection on cdf for p > 0

private:
    double p_ = 0.0;
    double z_ = 0.0;
    quadrature_config cfg_;
    std::vector<double> cdf_table_; // cdf at k/cells, k = 0..cells (p > 0)
};

// (K rho)(a) = integral over b of kernel(a,b)*density(b), with the domain
// split at b = a and b = 1-a where transition kernels jump. Endpoint
// behaviour up to an inverse square root is handled by the sin^2
// substitution of the quadrature layer.
double apply_kernel(const std::function<double(double)>& density,
                    const std::function<double(double, double)>& kernel,
                    double a, const quadrature_config& cfg = {});

// max over the grid of |(K rho)(a) - rho(a)| / rho(a) for the exponent-p
// walk; p = 0 uses the closed-form arcsine density and kernel_x.
double stationarity_residual(double p, const std::vector<double>& grid,
                             const quadrature_config& cfg = {});

} // namespace arcwalk
