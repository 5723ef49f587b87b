#pragma once

#include <cstddef>
#include <vector>

#include "arcwalk/rng.hpp"

namespace arcwalk {

enum class path_kind { free_motion, bridge, meander, spliced };

// Uniformly discretized function on [0,1]: values[k] is the path at s = k/n
// for k = 0..n. n must be a power of two (>= 2) so grids refine dyadically.
struct brownian_path {
    std::size_t n = 0;
    path_kind kind = path_kind::free_motion;
    std::vector<double> values; // size n+1, values[0] == 0

    // Linear interpolation at s in [0,1].
    double at(double s) const;
};

// Cumulative sum of i.i.d. normal increments with variance 1/n.
brownian_path sample_bm(std::size_t n, rng& stream);

// B(s) = W(s) - s*W(1) from a fresh motion; the endpoint is exactly 0.
brownian_path sample_bridge(std::size_t n, rng& stream);

// Brownian motion conditioned positive on (0,1]. Construction: endpoint r
// from the Rayleigh law (inverse CDF of a single open uniform), then a
// 3-dimensional Bessel bridge from 0 to r,
//   M(s) = sqrt((b1(s) + s*r)^2 + b2(s)^2 + b3(s)^2),
// with b1,b2,b3 independent standard Brownian bridges drawn in that order.
brownian_path sample_meander(std::size_t n, rng& stream);

struct splice_input {
    const brownian_path& bridge;
    const brownian_path& meander;
    int rademacher = 1;  // +1 or -1
    double split = 0.5;  // strictly inside (0,1)
};

/**
 * Joins a bridge on [0,split] with a signed meander on [split,1], both
 * time-rescaled from [0,1] by linear interpolation. Brownian scaling fixes
 * the amplitudes: the bridge section is multiplied by sqrt(split) and the
 * meander section by sqrt(1-split), so the result has Brownian covariance.
 * Grid points with s_k <= split take the bridge branch.
 */
brownian_path splice(const splice_input& input);

// (1/n) * #{k in 1..n : values[k] > 0}; exact zeros count as non-positive.
double occupation_time(const brownian_path& path);

// Largest s where consecutive grid values straddle or touch zero, refined by
// linear interpolation inside the bracketing cell; 0 if the path never
// returns to zero after s = 0.
double last_zero(const brownian_path& path);

struct hidden_step_result {
    brownian_path path;
    double occupation = 0.0;
};

// One transition of the function-valued chain: sample a bridge, a meander
// and a Rademacher sign (in that order), splice at split = prev_occupation,
// and report the new path with its positive occupation time.
hidden_step_result hidden_step(double prev_occupation, std::size_t n, rng& stream);

} // namespace arcwalk
