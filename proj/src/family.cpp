#include "gfa/family.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gfa {

std::string to_string(FamilyKind k) {
    switch (k) {
        case FamilyKind::point_interior: return "point_interior";
        case FamilyKind::point_boundary: return "point_boundary";
        case FamilyKind::at_infinity: return "at_infinity";
        case FamilyKind::near_boundary: return "near_boundary";
    }
    return "?";
}

std::string to_string(InfinitySide s) {
    switch (s) {
        case InfinitySide::both: return "both";
        case InfinitySide::left: return "left";
        case InfinitySide::right: return "right";
    }
    return "?";
}

FamilyKind family_kind_from_string(const std::string& s) {
    if (s == "point_interior") return FamilyKind::point_interior;
    if (s == "point_boundary") return FamilyKind::point_boundary;
    if (s == "at_infinity") return FamilyKind::at_infinity;
    if (s == "near_boundary") return FamilyKind::near_boundary;
    throw ConfigError("unknown family kind: " + s);
}

InfinitySide infinity_side_from_string(const std::string& s) {
    if (s == "both") return InfinitySide::both;
    if (s == "left") return InfinitySide::left;
    if (s == "right") return InfinitySide::right;
    throw ConfigError("unknown at_infinity side: " + s);
}

namespace {

double dist(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

double norm(std::span<const double> a) {
    double s = 0.0;
    for (double v : a) s += v * v;
    return std::sqrt(s);
}

// distance from a point to the box closure (0 when inside)
double boundary_proximity(const Ambient& ambient, std::span<const double> x) {
    double s = 0.0;
    for (int i = 0; i < ambient.dimension(); ++i) {
        const double xi = x[static_cast<size_t>(i)];
        const double lo = ambient.lo()[static_cast<size_t>(i)];
        const double hi = ambient.hi()[static_cast<size_t>(i)];
        double d = 0.0;
        if (xi < lo) d = lo - xi;
        else if (xi > hi) d = xi - hi;
        s += d * d;
    }
    return std::sqrt(s);
}

} // namespace

ShrinkingFamily make_family(FamilyKind kind, const Ambient& ambient,
                            std::optional<std::vector<double>> x0, InfinitySide side) {
    ShrinkingFamily f;
    f.kind_ = kind;
    f.ambient_ = ambient;
    f.side_ = side;
    const int k = ambient.dimension();

    switch (kind) {
        case FamilyKind::point_interior:
        case FamilyKind::point_boundary: {
            if (!x0 || static_cast<int>(x0->size()) != k)
                throw ConfigError("point families require a base point of dimension k");
            // closure check: inside or within epsilon of the boundary
            const bool inside = ambient.contains(*x0);
            const double bd = ambient.boundary_distance(*x0);
            const bool on_closure = inside || (std::isfinite(bd) && std::abs(bd) <= 1e-12) ||
                                    (!inside && boundary_proximity(ambient, *x0) <= 1e-12);
            if (!on_closure)
                throw ConfigError("base point lies outside the closure of Omega");
            if (kind == FamilyKind::point_interior && !inside)
                throw ConfigError("point_interior requires the base point inside Omega");
            if (kind == FamilyKind::point_boundary && inside && bd > 1e-12)
                throw ConfigError("point_boundary requires the base point on the boundary of Omega");
            f.x0_ = *x0;
            break;
        }
        case FamilyKind::at_infinity: {
            if (ambient.bounded())
                throw ConfigError("at_infinity requires an unbounded Omega");
            if (side != InfinitySide::both && k != 1)
                throw ConfigError("one-sided at_infinity families are k = 1 only");
            if (k == 1) {
                const Interval om = ambient.interval();
                if (side == InfinitySide::left && std::isfinite(om.lo))
                    throw ConfigError("left at_infinity requires Omega unbounded below");
                if (side == InfinitySide::right && std::isfinite(om.hi))
                    throw ConfigError("right at_infinity requires Omega unbounded above");
            }
            break;
        }
        case FamilyKind::near_boundary: {
            if (!ambient.has_boundary())
                throw ConfigError("near_boundary requires Omega with nonempty boundary");
            break;
        }
    }
    return f;
}

bool ShrinkingFamily::in_O(int n, std::span<const double> x) const {
    if (n < 1) throw ConfigError("family: index n must be >= 1");
    if (!ambient_.contains(x)) return false;
    switch (kind_) {
        case FamilyKind::point_interior:
        case FamilyKind::point_boundary:
            return dist(x, x0_) < 1.0 / n;
        case FamilyKind::at_infinity:
            switch (side_) {
                case InfinitySide::both: return norm(x) > static_cast<double>(n);
                case InfinitySide::left: return x[0] < -static_cast<double>(n);
                case InfinitySide::right: return x[0] > static_cast<double>(n);
            }
            return false;
        case FamilyKind::near_boundary:
            return ambient_.boundary_distance(x) < 1.0 / n;
    }
    return false;
}

std::vector<Interval> ShrinkingFamily::O_intervals(int n) const {
    if (dimension() != 1) throw ConfigError("O_intervals requires k = 1");
    const Interval om = ambient_.interval();
    std::vector<Interval> out;
    auto push = [&](Interval c) {
        c = intersect(c, om);
        if (!c.empty()) out.push_back(c);
    };
    switch (kind_) {
        case FamilyKind::point_interior:
        case FamilyKind::point_boundary:
            push({x0_[0] - 1.0 / n, x0_[0] + 1.0 / n});
            break;
        case FamilyKind::at_infinity:
            if (side_ != InfinitySide::right) push({-kInf, -static_cast<double>(n)});
            if (side_ != InfinitySide::left) push({static_cast<double>(n), kInf});
            break;
        case FamilyKind::near_boundary:
            if (std::isfinite(om.lo)) push({om.lo, om.lo + 1.0 / n});
            if (std::isfinite(om.hi)) push({om.hi - 1.0 / n, om.hi});
            break;
    }
    return out;
}

std::vector<Interval> ShrinkingFamily::complement_intervals(int n) const {
    if (dimension() != 1) throw ConfigError("complement_intervals requires k = 1");
    const Interval om = ambient_.interval();
    const std::vector<Interval> os = O_intervals(n);
    // subtract each O-interval from Omega; O-intervals are disjoint and sorted
    std::vector<Interval> out{om};
    for (const Interval& o : os) {
        std::vector<Interval> next;
        for (const Interval& c : out) {
            Interval left{c.lo, std::min(c.hi, o.lo)};
            Interval right{std::max(c.lo, o.hi), c.hi};
            if (!left.empty()) next.push_back(left);
            if (!right.empty()) next.push_back(right);
        }
        out = std::move(next);
    }
    return out;
}

std::vector<double> ShrinkingFamily::witness(int n) const {
    const int k = dimension();
    std::vector<double> w(static_cast<size_t>(k), 0.0);
    switch (kind_) {
        case FamilyKind::point_interior:
            return x0_;
        case FamilyKind::point_boundary: {
            // nudge inward from the boundary point
            const std::vector<double> c = ambient_.anchor();
            w = x0_;
            for (int i = 0; i < k; ++i) {
                const double step = c[static_cast<size_t>(i)] - x0_[static_cast<size_t>(i)];
                w[static_cast<size_t>(i)] += step * std::min(1.0, 1.0 / (4.0 * n * std::max(1.0, std::abs(step))));
            }
            if (!in_O(n, w))
                throw NumericError("family witness: could not find a point in O_n");
            return w;
        }
        case FamilyKind::at_infinity: {
            const double v = static_cast<double>(n) + 0.5;
            w[0] = (side_ == InfinitySide::left) ? -v : v;
            if (!in_O(n, w)) {
                w[0] = -v;
                if (!in_O(n, w))
                    throw NumericError("family witness: could not find a point in O_n");
            }
            return w;
        }
        case FamilyKind::near_boundary: {
            w = ambient_.anchor();
            for (int i = 0; i < k; ++i) {
                const double lo = ambient_.lo()[static_cast<size_t>(i)];
                const double hi = ambient_.hi()[static_cast<size_t>(i)];
                if (std::isfinite(lo)) { w[static_cast<size_t>(i)] = lo + 1.0 / (2.0 * n); break; }
                if (std::isfinite(hi)) { w[static_cast<size_t>(i)] = hi - 1.0 / (2.0 * n); break; }
            }
            if (!in_O(n, w))
                throw NumericError("family witness: could not find a point in O_n");
            return w;
        }
    }
    return w;
}

double ShrinkingFamily::separation(int n) const {
    switch (kind_) {
        case FamilyKind::point_interior:
        case FamilyKind::point_boundary:
        case FamilyKind::near_boundary:
            return 1.0 / n - 1.0 / (n + 1);
        case FamilyKind::at_infinity:
            return 1.0;
    }
    return 0.0;
}

std::string ShrinkingFamily::describe() const {
    std::ostringstream os;
    os << to_string(kind_);
    if (kind_ == FamilyKind::at_infinity && side_ != InfinitySide::both)
        os << "(" << to_string(side_) << ")";
    if (!x0_.empty()) {
        os << " x0=(";
        for (size_t i = 0; i < x0_.size(); ++i) os << (i ? "," : "") << x0_[i];
        os << ")";
    }
    os << " on " << ambient_.describe();
    return os.str();
}

bool same_family(const ShrinkingFamily& a, const ShrinkingFamily& b) {
    return a.kind() == b.kind() && a.side() == b.side() &&
           a.base_point() == b.base_point() &&
           a.ambient().lo() == b.ambient().lo() && a.ambient().hi() == b.ambient().hi();
}

} // namespace gfa
