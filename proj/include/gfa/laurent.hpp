#pragma once

#include "gfa/representative.hpp"

namespace gfa {

/// Truncated Laurent expansion of zeta -> f(x, zeta) at fixed real x in O_n,
/// computed by trapezoidal contour quadrature on |zeta| = radius.
struct LaurentSeries {
    std::vector<double> x;
    double radius = 0.0;
    int J = 0; // coefficients a_j for j in [-J, J]
    int M = 0; // contour points used
    std::vector<Cplx> coeff;
    double residual = 0.0; // max reconstruction error on an interleaved circle

    Cplx a(int j) const;
    Cplx reconstruct(Cplx zeta) const;
    /// Largest |a_j| and its index.
    std::pair<int, double> dominant() const;
};

/// x must lie in O_n (the B-branch provides the full punctured disk) and
/// radius < 1/n. M = max(256, 8J + 16) equispaced angles.
LaurentSeries laurent(const Representative& f, const ShrinkingFamily& fam, int n,
                      std::span<const double> x, double radius, int J,
                      const EvalOptions& opts = {});

/// Convenience for k = 1 using the representative's claimed space.
LaurentSeries laurent(const Representative& f, double x, double radius, int J,
                      const EvalOptions& opts = {});

} // namespace gfa
