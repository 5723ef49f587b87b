#include "arcwalk/brownian.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace arcwalk {
namespace {

void validate_resolution(std::size_t n) {
    if (n < 2 || (n & (n - 1)) != 0)
        throw std::domain_error("brownian path resolution must be a power of two >= 2");
}

} // namespace

double brownian_path::at(double s) const {
    if (!(s >= 0.0 && s <= 1.0))
        throw std::domain_error("brownian_path::at: s must lie in [0,1]");
    const double t = s * static_cast<double>(n);
    const auto k = static_cast<std::size_t>(t);
    if (k >= n) return values[n];
    const double frac = t - static_cast<double>(k);
    return values[k] + frac * (values[k + 1] - values[k]);
}

brownian_path sample_bm(std::size_t n, rng& stream) {
    validate_resolution(n);
    brownian_path path{n, path_kind::free_motion, std::vector<double>(n + 1, 0.0)};
    const double scale = std::sqrt(1.0 / static_cast<double>(n));
    for (std::size_t k = 1; k <= n; ++k)
        path.values[k] = path.values[k - 1] + scale * stream.normal();
    return path;
}

brownian_path sample_bridge(std::size_t n, rng& stream) {
    brownian_path path = sample_bm(n, stream);
    path.kind = path_kind::bridge;
    const double endpoint = path.values[n];
    for (std::size_t k = 1; k < n; ++k)
        path.values[k] -= (static_cast<double>(k) / static_cast<double>(n)) * endpoint;
    path.values[n] = 0.0;
    return path;
}

brownian_path sample_meander(std::size_t n, rng& stream) {
    validate_resolution(n);
    const double r = std::sqrt(-2.0 * std::log(stream.uniform_open()));
    const brownian_path b1 = sample_bridge(n, stream);
    const brownian_path b2 = sample_bridge(n, stream);
    const brownian_path b3 = sample_bridge(n, stream);
    brownian_path path{n, path_kind::meander, std::vector<double>(n + 1, 0.0)};
    for (std::size_t k = 0; k <= n; ++k) {
        const double s = static_cast<double>(k) / static_cast<double>(n);
        const double radial = b1.values[k] + s * r;
        path.values[k] = std::sqrt(radial * radial + b2.values[k] * b2.values[k] +
                                   b3.values[k] * b3.values[k]);
    }
    return path;
}

brownian_path splice(const splice_input& in) {
    if (in.bridge.n != in.meander.n)
        throw std::domain_error("splice: bridge and meander must share a resolution");
    if (in.rademacher != 1 && in.rademacher != -1)
        throw std::domain_error("splice: rademacher sign must be +1 or -1");
    if (!(in.split > 0.0 && in.split < 1.0))
        throw std::domain_error("splice: split must lie strictly inside (0,1)");
    const std::size_t n = in.bridge.n;
    brownian_path path{n, path_kind::spliced, std::vector<double>(n + 1, 0.0)};
    const double left_scale = std::sqrt(in.split);
    const double right_scale = static_cast<double>(in.rademacher) * std::sqrt(1.0 - in.split);
    for (std::size_t k = 0; k <= n; ++k) {
        const double s = static_cast<double>(k) / static_cast<double>(n);
        if (s <= in.split) {
            path.values[k] = left_scale * in.bridge.at(s / in.split);
        } else {
            path.values[k] =
                right_scale * in.meander.at((s - in.split) / (1.0 - in.split));
        }
    }
    return path;
}

double occupation_time(const brownian_path& path) {
    std::size_t positive = 0;
    for (std::size_t k = 1; k <= path.n; ++k)
        if (path.values[k] > 0.0) ++positive;
    return static_cast<double>(positive) / static_cast<double>(path.n);
}

double last_zero(const brownian_path& path) {
    const auto n = static_cast<double>(path.n);
    for (std::size_t k = path.n; k >= 1; --k) {
        const double u = path.values[k - 1];
        const double v = path.values[k];
        if (v == 0.0) return static_cast<double>(k) / n;
        if (u == 0.0) return static_cast<double>(k - 1) / n;
        if ((u > 0.0) != (v > 0.0)) {
            const double t = u / (u - v);
            return (static_cast<double>(k - 1) + t) / n;
        }
    }
    return 0.0;
}

hidden_step_result hidden_step(double prev_occupation, std::size_t n, rng& stream) {
    if (!(prev_occupation > 0.0 && prev_occupation < 1.0))
        throw std::domain_error("hidden_step: previous occupation must lie strictly inside (0,1)");
    const brownian_path bridge = sample_bridge(n, stream);
    const brownian_path meander = sample_meander(n, stream);
    const int rademacher = stream.uniform() < 0.5 ? -1 : 1;
    brownian_path path = splice({.bridge = bridge,
                                 .meander = meander,
                                 .rademacher = rademacher,
                                 .split = prev_occupation});
    const double occupation = occupation_time(path);
    return {std::move(path), occupation};
}

} // namespace arcwalk
