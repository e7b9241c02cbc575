#pragma once

#include <span>
#include <vector>

#include "gfa/numeric.hpp"

namespace gfa {

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double rms_residual = 0.0;
    int n_used = 0;
};

/// Least-squares line through (x, y).
LineFit fit_line(std::span<const double> x, std::span<const double> y);

/// Fit of log s against log xi over the small-xi tail of the grid.
/// Zeros and non-finite values are excluded; `all_zero` / `has_overflow`
/// summarize what was excluded.
struct LogLogFit {
    LineFit line;
    int n_total = 0;
    int n_usable = 0;
    bool all_zero = false;
    bool has_overflow = false;
    double window_lo = 0.0, window_hi = 0.0; // xi range actually fitted
};

LogLogFit fit_loglog_tail(std::span<const double> xi, std::span<const double> s,
                          int min_points = 8);

/// Geometric grid from `from` down to `to` (descending), per_decade points
/// per decade, endpoints included.
std::vector<double> geometric_grid(double from, double to, int per_decade);

/// Windowed extrapolation of v(xi) as xi -> 0+ with the model a + b xi^p,
/// p fitted per 3-point window on a geometric grid.
struct RichardsonResult {
    enum class Verdict { converged, divergent };
    Verdict verdict = Verdict::converged;
    Cplx limit{0, 0};
    double order = 0.0;            // fitted convergence order (converged case)
    double divergence_order = 0.0; // fitted pole order (divergent case)
    double confidence = 0.0;       // relative spread of the window limits
    bool low_confidence = false;
    std::vector<Cplx> window_limits;
    std::vector<double> window_orders;
};

RichardsonResult richardson_extrapolate(std::span<const double> xi,
                                        std::span<const Cplx> v,
                                        double confidence_tol = 1e-3);

} // namespace gfa
