#include "gfa/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gfa {

Interval intersect(const Interval& a, const Interval& b) {
    return Interval{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

Ambient Ambient::full_space(int k) {
    if (k < 1) throw ConfigError("ambient: dimension must be >= 1");
    Ambient a;
    a.k_ = k;
    a.lo_.assign(static_cast<size_t>(k), -kInf);
    a.hi_.assign(static_cast<size_t>(k), kInf);
    return a;
}

Ambient Ambient::box(std::vector<double> lo, std::vector<double> hi) {
    if (lo.empty() || lo.size() != hi.size())
        throw ConfigError("ambient: box bounds must be nonempty and equally sized");
    for (size_t i = 0; i < lo.size(); ++i)
        if (!(lo[i] < hi[i]))
            throw ConfigError("ambient: box requires lo < hi on every axis");
    Ambient a;
    a.k_ = static_cast<int>(lo.size());
    a.lo_ = std::move(lo);
    a.hi_ = std::move(hi);
    return a;
}

bool Ambient::is_full_space() const {
    for (int i = 0; i < k_; ++i)
        if (std::isfinite(lo_[static_cast<size_t>(i)]) || std::isfinite(hi_[static_cast<size_t>(i)]))
            return false;
    return true;
}

bool Ambient::bounded() const {
    for (int i = 0; i < k_; ++i)
        if (!std::isfinite(lo_[static_cast<size_t>(i)]) || !std::isfinite(hi_[static_cast<size_t>(i)]))
            return false;
    return true;
}

bool Ambient::contains(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != k_) return false;
    for (int i = 0; i < k_; ++i)
        if (!(x[static_cast<size_t>(i)] > lo_[static_cast<size_t>(i)] &&
              x[static_cast<size_t>(i)] < hi_[static_cast<size_t>(i)]))
            return false;
    return true;
}

double Ambient::boundary_distance(std::span<const double> x) const {
    double d = kInf;
    for (int i = 0; i < k_; ++i) {
        const double xi = x[static_cast<size_t>(i)];
        if (std::isfinite(lo_[static_cast<size_t>(i)])) d = std::min(d, xi - lo_[static_cast<size_t>(i)]);
        if (std::isfinite(hi_[static_cast<size_t>(i)])) d = std::min(d, hi_[static_cast<size_t>(i)] - xi);
    }
    return d;
}

Interval Ambient::interval() const {
    if (k_ != 1) throw ConfigError("ambient: interval view requires k = 1");
    return Interval{lo_[0], hi_[0]};
}

std::vector<double> Ambient::anchor() const {
    std::vector<double> a(static_cast<size_t>(k_), 0.0);
    for (int i = 0; i < k_; ++i) {
        const double lo = lo_[static_cast<size_t>(i)], hi = hi_[static_cast<size_t>(i)];
        if (std::isfinite(lo) && std::isfinite(hi))
            a[static_cast<size_t>(i)] = 0.5 * (lo + hi);
        else if (std::isfinite(lo))
            a[static_cast<size_t>(i)] = lo + 1.0;
        else if (std::isfinite(hi))
            a[static_cast<size_t>(i)] = hi - 1.0;
    }
    return a;
}

double Ambient::exhaustion_coordinate(std::span<const double> x) const {
    double norm2 = 0.0;
    for (double xi : x) norm2 += xi * xi;
    double coord = std::sqrt(norm2);
    const double bd = boundary_distance(x);
    if (std::isfinite(bd) && bd > 0.0) coord = std::max(coord, 1.0 / bd);
    return coord;
}

int Ambient::exhaustion_cell(std::span<const double> x) const {
    const double c = exhaustion_coordinate(x);
    const int r = static_cast<int>(std::ceil(c));
    return std::max(1, r);
}

Interval Ambient::exhaustion_interval(int r) const {
    if (k_ != 1) throw ConfigError("ambient: exhaustion interval requires k = 1");
    Interval ball{-static_cast<double>(r), static_cast<double>(r)};
    Interval core = interval();
    if (std::isfinite(core.lo)) core.lo += 1.0 / r;
    if (std::isfinite(core.hi)) core.hi -= 1.0 / r;
    return intersect(ball, core);
}

std::string Ambient::describe() const {
    std::ostringstream os;
    if (is_full_space()) {
        os << "R^" << k_;
        return os.str();
    }
    os << "box";
    for (int i = 0; i < k_; ++i)
        os << " (" << lo_[static_cast<size_t>(i)] << "," << hi_[static_cast<size_t>(i)] << ")";
    return os.str();
}

} // namespace gfa
