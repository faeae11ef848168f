#pragma once

#include <functional>

namespace hellmann {

struct Minimum {
    double x;
    double value;
};

/// Golden-section search on [lo, hi] until the bracket is narrower than
/// rel_width * |x|. Assumes f is unimodal on the bracket.
Minimum golden_section(std::function<double(double)> const& f, double lo, double hi,
                       double rel_width = 1e-12);

struct LogScan {
    double lo;
    double hi;
    int points = 2000;
    double rel_width = 1e-12;
};

/// Global minimum of f on [lo, hi] by a log-uniform scan followed by
/// golden-section refinement of the best bracket. Equal scan values resolve
/// to the smallest x. Throws NumericalError if the best sample sits on the
/// scan boundary (no interior bracket).
Minimum scan_minimize(std::function<double(double)> const& f, LogScan const& scan);

} // namespace hellmann
