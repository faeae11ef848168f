#include "hellmann/minimize.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "hellmann/errors.hpp"

namespace hellmann {

Minimum golden_section(std::function<double(double)> const& f, double lo, double hi,
                       double rel_width) {
    constexpr double inv_phi = 0.6180339887498948482;
    double a = lo;
    double b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int iter = 0; iter < 500; ++iter) {
        double const mid = 0.5 * (a + b);
        if (b - a <= rel_width * std::abs(mid)) break;
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    return f1 <= f2 ? Minimum{x1, f1} : Minimum{x2, f2};
}

Minimum scan_minimize(std::function<double(double)> const& f, LogScan const& scan) {
    if (!(scan.lo > 0.0) || !(scan.hi > scan.lo) || scan.points < 3) {
        throw DomainError("scan_minimize: need 0 < lo < hi and at least 3 points");
    }
    double const log_lo = std::log(scan.lo);
    double const step = (std::log(scan.hi) - log_lo) / (scan.points - 1);
    std::vector<double> xs(scan.points);
    int best = -1;
    double best_value = std::numeric_limits<double>::infinity();
    for (int i = 0; i < scan.points; ++i) {
        xs[i] = std::exp(log_lo + step * i);
        double const value = f(xs[i]);
        if (value < best_value) {
            best_value = value;
            best = i;
        }
    }
    if (best <= 0 || best >= scan.points - 1) {
        std::ostringstream msg;
        msg << "scan_minimize: no interior minimum in [" << scan.lo << ", " << scan.hi << "]";
        if (best >= 0) msg << " (best sample at x=" << xs[best] << ")";
        throw NumericalError(msg.str());
    }
    Minimum refined = golden_section(f, xs[best - 1], xs[best + 1], scan.rel_width);
    if (best_value < refined.value) return {xs[best], best_value};
    return refined;
}

} // namespace hellmann
