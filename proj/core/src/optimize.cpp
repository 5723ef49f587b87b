#include "arcwalk/optimize.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace arcwalk {

scalar_min_result golden_section_min(const std::function<double(double)>& f,
                                     double lo, double hi, double x_tol,
                                     int max_iterations) {
    if (!(lo < hi)) throw std::domain_error("golden_section_min: requires lo < hi");
    if (!(x_tol > 0.0)) throw std::domain_error("golden_section_min: requires x_tol > 0");
    static const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo;
    double b = hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c);
    double fd = f(d);
    scalar_min_result result{};
    for (int it = 0; it < max_iterations; ++it) {
        result.iterations = it + 1;
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
        if (b - a <= x_tol) {
            result.converged = true;
            break;
        }
    }
    if (fc < fd) {
        result.x = c;
        result.fx = fc;
    } else {
        result.x = d;
        result.fx = fd;
    }
    return result;
}

} // namespace arcwalk
