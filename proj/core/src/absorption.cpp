#include "arcwalk/absorption.hpp"

#include <cmath>
#include <stdexcept>

#include "arcwalk/density.hpp"
#include "arcwalk/walk.hpp"

namespace arcwalk {

double bernoulli_limit_mean(double x, double p) {
    if (!(x > 0.0 && x < 1.0))
        throw std::domain_error("bernoulli_limit_mean: x must lie strictly inside (0,1)");
    if (!(p < 0.0))
        throw std::domain_error("bernoulli_limit_mean: requires p < 0");
    const double numerator = std::pow(x, p - 1.0) - std::pow(1.0 - x, p - 1.0);
    const double mean_pow = std::pow(lp_mean(x, 1.0 - x, p), p - 1.0);
    return 0.5 - numerator / (std::pow(2.0, 2.0 - 1.0 / p) * mean_pow);
}

absorb_outcome simulate_absorbing(double p, double x0, const absorb_config& cfg,
                                  rng& stream) {
    if (!(p < 0.0))
        throw std::domain_error("simulate_absorbing: requires p < 0");
    if (!(x0 > 0.0 && x0 < 1.0))
        throw std::domain_error("simulate_absorbing: x0 must lie strictly inside (0,1)");
    if (cfg.max_steps == 0)
        throw std::domain_error("simulate_absorbing: max_steps must be positive");
    if (!(cfg.eps > 0.0 && cfg.eps < 0.5))
        throw std::domain_error("simulate_absorbing: eps must lie in (0, 0.5)");
    const walk_params params{walk_variant::p_absorbing, p};
    double x = x0;
    for (std::size_t i = 0; i < cfg.max_steps; ++i) {
        if (x <= cfg.eps) return absorb_outcome::absorbed_at_zero;
        if (x >= 1.0 - cfg.eps) return absorb_outcome::absorbed_at_one;
        x = step(x, params, stream);
    }
    if (x <= cfg.eps) return absorb_outcome::absorbed_at_zero;
    if (x >= 1.0 - cfg.eps) return absorb_outcome::absorbed_at_one;
    return absorb_outcome::undecided;
}

absorb_outcome simulate_absorbing(double p, double x0, std::size_t max_steps,
                                  double eps, std::uint64_t seed) {
    rng stream(seed);
    return simulate_absorbing(p, x0, absorb_config{max_steps, eps}, stream);
}

} // namespace arcwalk
