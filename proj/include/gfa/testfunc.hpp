#pragma once

#include <string>
#include <vector>

#include "gfa/numeric.hpp"

namespace gfa {

/// Test functions from the declared catalog: truncated Gaussian and
/// polynomial x cosine bump, with exact support arithmetic.
class TestFunction {
public:
    /// exp(-((x-c)/sigma)^2) on [c - halfwidth, c + halfwidth].
    static TestFunction gaussian(double center = 0.0, double sigma = 1.0,
                                 double halfwidth = 8.0);
    /// p(x-c) * cos^2(pi (x-c) / (2 h)) on [c - h, c + h]; poly coefficients
    /// low order first, default {1}.
    static TestFunction bump(double center, double halfwidth,
                             std::vector<double> poly = {1.0});

    double operator()(double x) const;
    double support_lo() const { return lo_; }
    double support_hi() const { return hi_; }
    double center() const { return center_; }
    const std::string& describe() const { return describe_; }

private:
    enum class Kind { gaussian, bump } kind_ = Kind::gaussian;
    double center_ = 0.0, sigma_ = 1.0, lo_ = -8.0, hi_ = 8.0, halfwidth_ = 8.0;
    std::vector<double> poly_{1.0};
    std::string describe_;
};

} // namespace gfa
