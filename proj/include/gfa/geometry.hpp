#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gfa/numeric.hpp"

namespace gfa {

/// An open interval, possibly unbounded. Used for k = 1 set arithmetic.
struct Interval {
    double lo = -kInf;
    double hi = kInf;
    bool empty() const { return !(lo < hi); }
    bool contains(double x) const { return x > lo && x < hi; }
    double length() const { return hi - lo; }
};

/// Intersection of two open intervals.
Interval intersect(const Interval& a, const Interval& b);

/// The ambient open set Omega: R^k, an open box, or an open half-space
/// (a box with infinite ends). Assumed connected.
class Ambient {
public:
    Ambient() = default;
    /// Full space R^k.
    static Ambient full_space(int k);
    /// Open box with per-axis bounds; +-inf ends allowed.
    static Ambient box(std::vector<double> lo, std::vector<double> hi);

    int dimension() const { return k_; }
    bool is_full_space() const;
    bool bounded() const;
    bool has_boundary() const { return !is_full_space(); }

    bool contains(std::span<const double> x) const;
    /// Distance to the boundary; +inf for the full space.
    double boundary_distance(std::span<const double> x) const;

    /// k = 1 view of Omega as an interval.
    Interval interval() const;

    /// A point comfortably inside Omega (anchors sampling for k > 1).
    std::vector<double> anchor() const;

    /// Exhaustion coordinate: x lies in K_r iff coord(x) <= r, where
    /// K_r = Omega intersect closed ball of radius r minus a 1/r-neighborhood
    /// of the boundary.
    double exhaustion_coordinate(std::span<const double> x) const;
    /// Cell index r(x) = max(1, ceil(coord)).
    int exhaustion_cell(std::span<const double> x) const;
    /// k = 1 slice of K_r as an interval (empty if r too small).
    Interval exhaustion_interval(int r) const;

    const std::vector<double>& lo() const { return lo_; }
    const std::vector<double>& hi() const { return hi_; }

    std::string describe() const;

private:
    int k_ = 1;
    std::vector<double> lo_{-kInf};
    std::vector<double> hi_{kInf};
};

} // namespace gfa
