#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "arcwalk/quadrature.hpp"

namespace arcwalk {

enum class gof_test { ks, tv_binned };

std::string to_string(gof_test test);

struct gof_report {
    gof_test test = gof_test::ks;
    double statistic = 0.0;
    std::size_t n_samples = 0;
    double threshold = 0.0;
    bool pass = false; // statistic <= threshold
};

gof_report make_gof_report(gof_test test, double statistic, std::size_t n_samples,
                           double threshold);

// Two-sided Kolmogorov-Smirnov statistic against a reference CDF:
// max over sorted samples of max(i/n - F(x_(i)), F(x_(i)) - (i-1)/n).
double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf);

// Total variation distance between the empirical law of samples in (0,1) and
// a reference density, measured on n_bins equal-width bins:
// (1/2) * sum_bins |empirical mass - integral of density over the bin|.
// The reference bin masses tolerate inverse-square-root endpoint blowups.
double tv_binned(const std::vector<double>& samples,
                 const std::function<double(double)>& density,
                 std::size_t n_bins, const quadrature_config& cfg = {});

} // namespace arcwalk
