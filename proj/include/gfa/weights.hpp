#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gfa/family.hpp"

namespace gfa {

/// Step table over the compact exhaustion: value nu[r-1] on K_r \ K_{r-1},
/// clamped to the table ends. Values must be positive and nondecreasing.
struct PiecewiseNu {
    std::vector<double> nu;
    double at_cell(int r) const;
};

/// Strictly positive weight on Omega, closed under products and squares:
///   c * (1+|x|)^poly_m * min(d(x, boundary), 1)^(-blow_m) * nu-step.
class WeightFunction {
public:
    static WeightFunction constant(double c);
    static WeightFunction polynomial(int m, double c = 1.0);
    static WeightFunction boundary_blowup(int m, double c = 1.0);
    static WeightFunction piecewise(PiecewiseNu nu);

    double operator()(std::span<const double> x, const Ambient& omega) const;

    /// Max of the weight over a point set (the |phi|_K of the compactness
    /// proof, realized on grids).
    double sup_on(std::span<const std::vector<double>> xs, const Ambient& omega) const;

    /// Closed-form upper bound for the sup over the exhaustion cell K_r
    /// (|x| <= r and boundary distance >= 1/r there).
    double cell_sup_bound(int r) const;

    WeightFunction product(const WeightFunction& other) const;
    WeightFunction squared() const { return product(*this); }
    /// Least dominating catalog form (used for the space of a sum).
    WeightFunction join_max(const WeightFunction& other) const;

    bool is_constant_one() const;
    double constant_part() const { return c_; }
    int polynomial_exponent() const { return poly_m_; }
    int blowup_exponent() const { return blow_m_; }
    const std::optional<PiecewiseNu>& step() const { return nu_; }

    std::string describe() const;

private:
    double c_ = 1.0;
    int poly_m_ = 0;
    int blow_m_ = 0;
    std::optional<PiecewiseNu> nu_;
};

/// Identifies a Banach space H_{n,phi} over the given family's sectors.
struct SpaceIndex {
    int n = 1;
    WeightFunction phi = WeightFunction::constant(1.0);
    ShrinkingFamily family;

    std::string describe() const;
};

SpaceIndex space_index(int n, WeightFunction phi, ShrinkingFamily family);

/// Weight prescribed for the image of d/dx_i on H_{n,phi}:
///   phi(x) * (n+1) / min(d(x, boundary), 1).
WeightFunction derivative_weight(const WeightFunction& phi, int n);

} // namespace gfa
