#include "arcwalk/gof.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace arcwalk {

std::string to_string(gof_test test) {
    switch (test) {
        case gof_test::ks: return "KS";
        case gof_test::tv_binned: return "TVBinned";
    }
    return "unknown";
}

gof_report make_gof_report(gof_test test, double statistic, std::size_t n_samples,
                           double threshold) {
    return {test, statistic, n_samples, threshold, statistic <= threshold};
}

double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf) {
    if (samples.empty())
        throw std::domain_error("ks_statistic: samples must be non-empty");
    std::sort(samples.begin(), samples.end());
    const auto n = static_cast<double>(samples.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        const double above = static_cast<double>(i + 1) / n - f;
        const double below = f - static_cast<double>(i) / n;
        worst = std::max({worst, above, below});
    }
    return worst;
}

double tv_binned(const std::vector<double>& samples,
                 const std::function<double(double)>& density,
                 std::size_t n_bins, const quadrature_config& cfg) {
    if (samples.empty())
        throw std::domain_error("tv_binned: samples must be non-empty");
    if (n_bins < 2)
        throw std::domain_error("tv_binned: requires n_bins >= 2");
    std::vector<std::size_t> counts(n_bins, 0);
    for (double s : samples) {
        if (!(s > 0.0 && s < 1.0))
            throw std::domain_error("tv_binned: samples must lie strictly inside (0,1)");
        auto bin = static_cast<std::size_t>(s * static_cast<double>(n_bins));
        if (bin >= n_bins) bin = n_bins - 1;
        ++counts[bin];
    }
    const auto n = static_cast<double>(samples.size());
    double distance = 0.0;
    for (std::size_t b = 0; b < n_bins; ++b) {
        const double lo = static_cast<double>(b) / static_cast<double>(n_bins);
        const double hi = static_cast<double>(b + 1) / static_cast<double>(n_bins);
        const double model_mass = integrate_arcsine_segment(density, lo, hi, {}, cfg).value;
        distance += std::abs(static_cast<double>(counts[b]) / n - model_mass);
    }
    return 0.5 * distance;
}

} // namespace arcwalk
