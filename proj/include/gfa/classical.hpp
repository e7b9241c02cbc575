#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gfa/expr.hpp"

namespace gfa {

/// Real continuous function with compact support, built from a closed-form
/// shape, a sample table (linear interpolation), or an expression in z. The
/// integrand data of quadrature-defined representatives.
class RealFunc {
public:
    /// height * max(0, 1 - |x-c|/h) on [c-h, c+h].
    static RealFunc triangle(double center, double halfwidth, double height);
    /// amp * exp(-(x-c)^2 / (2 sigma^2)) truncated to [c-cut, c+cut].
    static RealFunc gaussian(double center, double sigma, double amplitude,
                             double cut_halfwidth);
    /// amp * cos^2(pi (x-c) / (2h)) on [c-h, c+h].
    static RealFunc raised_cosine(double center, double halfwidth, double amplitude);
    /// Sample table (lambda, f(lambda)); linear interpolation between nodes,
    /// zero outside [xs.front(), xs.back()].
    static RealFunc table(std::vector<double> xs, std::vector<double> ys);
    /// Expression in z evaluated at real arguments, restricted to [a, b].
    static RealFunc expression(ExprPtr e, double a, double b);
    /// Constant c on [a, b].
    static RealFunc boxcar(double c, double a, double b);

    double operator()(double x) const;
    double support_lo() const { return lo_; }
    double support_hi() const { return hi_; }
    /// Interior points where the integrand is only piecewise smooth.
    const std::vector<double>& kinks() const { return kinks_; }

    /// Integral over the support (adaptive quadrature).
    double integral() const;
    /// Integral of |f| over the support.
    double integral_abs() const;

    /// f shifted by a constant: x -> f(x) - c on the same support.
    RealFunc minus_constant(double c) const;

    const std::string& describe() const { return describe_; }

private:
    std::function<double(double)> fn_;
    double lo_ = 0.0, hi_ = 0.0;
    std::vector<double> kinks_;
    std::string describe_;
};

} // namespace gfa
