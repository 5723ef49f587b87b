#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "arcwalk/rng.hpp"

namespace arcwalk {

// x/y fix the symmetric two-sided dynamics (p = 0 semantics); p_family takes
// any finite exponent p; p_absorbing requires p < 0 and treats {0,1} as
// absorbing states.
enum class walk_variant { x, y, p_family, p_absorbing };

struct walk_params {
    walk_variant variant = walk_variant::x;
    double p = 0.0; // ignored for variants x and y
};

struct chain_trace {
    walk_params params;
    std::uint64_t seed = 0;
    std::size_t burn_in = 0;
    std::size_t thinning = 1;
    std::vector<double> states;
};

// Transition density of the symmetric walk: from state b, the next state a
// is uniform on (0,b) or on (b,1) with equal probability.
double kernel_x(double a, double b);

// Transition density of the reflected-branch walk: from state b, uniform on
// (0,b) or on (1-b,1) with equal probability. The two branch supports overlap
// on (1-b,b) when b > 1/2 and the densities add there.
double kernel_y(double a, double b);

// Transition density of the tilted family: from state x, jump into (0,x)
// with probability proportional to x^p, else into (x,1); p = 0 reduces to
// kernel_x. Evaluated in log space so large |p| does not overflow.
double kernel_p(double s, double x, double p);

// P(next state lands in (0,x)) = x^p / (x^p + (1-x)^p), computed as
// 1/(1 + exp(p*(log(1-x) - log(x)))).
double branch_weight(double x, double p);

// One transition. Consumes exactly two uniforms in a fixed order: the branch
// draw first, then the position draw (open-interval). For p_absorbing an
// endpoint state is returned unchanged and consumes no draws.
double step(double x, const walk_params& params, rng& stream);

// Runs burn_in steps, then records every thinning-th state, n_steps times
// (total raw steps: burn_in + n_steps*thinning). Deterministic per seed.
chain_trace simulate(const walk_params& params, double x0, std::size_t n_steps,
                     std::size_t burn_in, std::size_t thinning, std::uint64_t seed);

} // namespace arcwalk
