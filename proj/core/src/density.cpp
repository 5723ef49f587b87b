#include "arcwalk/density.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "arcwalk/walk.hpp"

namespace arcwalk {
namespace {

constexpr double pi = std::numbers::pi;

void require_interior(double s, const char* what) {
    if (!(s > 0.0 && s < 1.0))
        throw std::domain_error(std::string(what) + " must lie strictly inside (0,1)");
}

double cached_z_p(double p, const quadrature_config& cfg) {
    static std::map<double, double> cache; // exact-bits key
    static std::mutex mutex;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(p);
        if (it != cache.end()) return it->second;
    }
    const double z = z_p(p, cfg);
    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(p, z);
    return z;
}

} // namespace

double rho_arcsine(double s) {
    require_interior(s, "rho_arcsine: s");
    return 1.0 / (pi * std::sqrt(s * (1.0 - s)));
}

double arcsine_cdf(double s) {
    if (!(s >= 0.0 && s <= 1.0))
        throw std::domain_error("arcsine_cdf: s must lie in [0,1]");
    return (2.0 / pi) * std::asin(std::sqrt(s));
}

double arcsine_quantile(double u) {
    if (!(u >= 0.0 && u <= 1.0))
        throw std::domain_error("arcsine_quantile: u must lie in [0,1]");
    const double t = std::sin(0.5 * pi * u);
    return t * t;
}

double lp_mean(double a, double b, double p) {
    if (a < 0.0 || b < 0.0) throw std::domain_error("lp_mean: inputs must be nonnegative");
    if (std::isnan(p)) throw std::domain_error("lp_mean: p must not be NaN");
    if (a == 0.0 && b == 0.0 && p <= 0.0)
        throw std::domain_error("lp_mean: a and b must not both vanish for p <= 0");
    if (p == 0.0) return std::sqrt(a * b);
    if (std::isinf(p)) return p > 0.0 ? std::max(a, b) : std::min(a, b);
    if (a == 0.0 || b == 0.0) {
        if (p < 0.0) return 0.0;
        return std::max(a, b) * std::pow(0.5, 1.0 / p);
    }
    const double la = p * std::log(a);
    const double lb = p * std::log(b);
    const double m = std::max(la, lb);
    const double log_sum = m + std::log(0.5 * (std::exp(la - m) + std::exp(lb - m)));
    return std::exp(log_sum / p);
}

double z_p(double p, const quadrature_config& cfg) {
    if (!(p > 0.0)) throw std::domain_error("z_p: requires p > 0");
    constexpr double cutoff = 85.0; // tail mass under exp(-|u|/2) is < 2e-18
    auto g = [p](double u) {
        const double s = 1.0 / (1.0 + std::exp(-u));
        const double t = 1.0 / (1.0 + std::exp(u)); // = 1 - s, accurately
        return s * t / lp_mean(s, t, p);
    };
    const quadrature_result r = integrate_split(g, -cutoff, cutoff, {0.0}, cfg);
    if (!r.converged)
        throw std::runtime_error("z_p: quadrature did not converge; error estimate " +
                                 std::to_string(r.error_estimate));
    return r.value;
}

double rho_p(double s, double p, const quadrature_config& cfg) {
    require_interior(s, "rho_p: s");
    if (!(p > 0.0)) throw std::domain_error("rho_p: requires p > 0");
    return 1.0 / (cached_z_p(p, cfg) * lp_mean(s, 1.0 - s, p));
}

density_model::density_model(double p, const quadrature_config& cfg)
    : p_(p), cfg_(cfg) {
    if (!(p >= 0.0)) throw std::domain_error("density_model: requires p >= 0");
    if (p_ == 0.0) {
        z_ = pi;
        return;
    }
    z_ = cached_z_p(p_, cfg_);
    constexpr std::size_t cells = 1024;
    quadrature_config cell_cfg = cfg_;
    cell_cfg.abs_tol = std::min(cfg_.abs_tol, 1e-12);
    cdf_table_.resize(cells + 1, 0.0);
    for (std::size_t k = 1; k <= cells; ++k) {
        const double lo = static_cast<double>(k - 1) / cells;
        const double hi = static_cast<double>(k) / cells;
        const auto mass = integrate([this](double s) { return pdf(s); }, lo, hi, cell_cfg);
        cdf_table_[k] = cdf_table_[k - 1] + mass.value;
    }
}

double density_model::pdf(double s) const {
    require_interior(s, "density_model::pdf: s");
    if (p_ == 0.0) return rho_arcsine(s);
    return 1.0 / (z_ * lp_mean(s, 1.0 - s, p_));
}

double density_model::cdf(double s) const {
    if (!(s >= 0.0 && s <= 1.0))
        throw std::domain_error("density_model::cdf: s must lie in [0,1]");
    if (p_ == 0.0) return arcsine_cdf(s);
    if (s == 0.0) return 0.0;
    if (s == 1.0) return 1.0;
    const std::size_t cells = cdf_table_.size() - 1;
    const auto k = static_cast<std::size_t>(s * cells);
    const double lo = static_cast<double>(k) / cells;
    double value = cdf_table_[k];
    if (s > lo)
        value += integrate([this](double t) { return pdf(t); }, lo, s, cfg_).value;
    return std::clamp(value, 0.0, 1.0);
}

double density_model::quantile(double u) const {
    if (!(u >= 0.0 && u <= 1.0))
        throw std::domain_error("density_model::quantile: u must lie in [0,1]");
    if (p_ == 0.0) return arcsine_quantile(u);
    if (u == 0.0) return 0.0;
    if (u == 1.0) return 1.0;
    double lo = 0.0;
    double hi = 1.0;
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        (cdf(mid) < u ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double apply_kernel(const std::function<double(double)>& density,
                    const std::function<double(double, double)>& kernel,
                    double a, const quadrature_config& cfg) {
    require_interior(a, "apply_kernel: a");
    auto f = [&](double b) { return kernel(a, b) * density(b); };
    const quadrature_result r = integrate_unit_arcsine(f, {a, 1.0 - a}, cfg);
    if (!r.converged)
        throw std::runtime_error("apply_kernel: quadrature did not converge; error estimate " +
                                 std::to_string(r.error_estimate));
    return r.value;
}

double stationarity_residual(double p, const std::vector<double>& grid,
                             const quadrature_config& cfg) {
    if (grid.empty())
        throw std::domain_error("stationarity_residual: grid must be non-empty");
    const density_model model(p, cfg);
    std::function<double(double)> density;
    std::function<double(double, double)> kernel;
    if (p == 0.0) {
        density = [](double s) { return rho_arcsine(s); };
        kernel = [](double a, double b) { return kernel_x(a, b); };
    } else {
        density = [&model](double s) { return model.pdf(s); };
        kernel = [p](double a, double b) { return kernel_p(a, b, p); };
    }
    double worst = 0.0;
    for (double a : grid) {
        require_interior(a, "stationarity_residual: grid point");
        const double lhs = apply_kernel(density, kernel, a, cfg);
        const double ref = density(a);
        worst = std::max(worst, std::abs(lhs - ref) / ref);
    }
    return worst;
}

} // namespace arcwalk
