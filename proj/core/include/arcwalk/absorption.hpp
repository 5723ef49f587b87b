#pragma once

#include <cstddef>
#include <cstdint>

#include "arcwalk/rng.hpp"

namespace arcwalk {

// Mean of the limiting Bernoulli law of the absorbing walk started at x with
// exponent p < 0:
//   1/2 - (x^(p-1) - (1-x)^(p-1)) / (2^(2-1/p) * lp_mean(x,1-x,p)^(p-1)).
double bernoulli_limit_mean(double x, double p);

enum class absorb_outcome { absorbed_at_zero, absorbed_at_one, undecided };

struct absorb_config {
    std::size_t max_steps = 10000;
    // Absorption is declared when the state enters [0,eps] or [1-eps,1]; the
    // continuous chain never hits an endpoint exactly in finite time, and for
    // p < 0 the inward drift vanishes fast enough near the endpoints that
    // escaping the band is negligible at this width.
    double eps = 1e-9;
};

// Runs the absorbing dynamics from x0 until a band is entered or max_steps
// transitions have been taken.
absorb_outcome simulate_absorbing(double p, double x0, const absorb_config& cfg,
                                  rng& stream);

absorb_outcome simulate_absorbing(double p, double x0, std::size_t max_steps,
                                  double eps, std::uint64_t seed);

} // namespace arcwalk
