#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gfa/geometry.hpp"

namespace gfa {

enum class FamilyKind { point_interior, point_boundary, at_infinity, near_boundary };
enum class InfinitySide { both, left, right };

std::string to_string(FamilyKind k);
std::string to_string(InfinitySide s);
FamilyKind family_kind_from_string(const std::string& s);
InfinitySide infinity_side_from_string(const std::string& s);

/// The auxiliary shrinking family (O_n): nonvoid open sets with
/// O_{n+1} subset O_n and positive separation d(O_{n+1}, complement of O_n).
class ShrinkingFamily {
public:
    ShrinkingFamily() = default;

    FamilyKind kind() const { return kind_; }
    const Ambient& ambient() const { return ambient_; }
    int dimension() const { return ambient_.dimension(); }
    const std::vector<double>& base_point() const { return x0_; }
    InfinitySide side() const { return side_; }

    /// Membership of x in O_n.
    bool in_O(int n, std::span<const double> x) const;

    /// O_n as a union of open intervals (k = 1 only), already intersected
    /// with Omega.
    std::vector<Interval> O_intervals(int n) const;
    /// Omega \ closure-ish of O_n as intervals (k = 1 only); open-set
    /// complement within Omega, used for A-branch sampling.
    std::vector<Interval> complement_intervals(int n) const;

    /// A point guaranteed to lie in O_n.
    std::vector<double> witness(int n) const;

    /// Closed-form lower bound for d(O_{n+1}, complement of O_n in Omega).
    double separation(int n) const;

    std::string describe() const;

    friend ShrinkingFamily make_family(FamilyKind kind, const Ambient& ambient,
                                       std::optional<std::vector<double>> x0,
                                       InfinitySide side);

private:
    FamilyKind kind_ = FamilyKind::at_infinity;
    Ambient ambient_ = Ambient::full_space(1);
    std::vector<double> x0_;
    InfinitySide side_ = InfinitySide::both;
};

/// Builds a family, validating params against the kind (base point within the
/// closure of Omega for point kinds, unbounded Omega for at_infinity, ...).
ShrinkingFamily make_family(FamilyKind kind, const Ambient& ambient,
                            std::optional<std::vector<double>> x0 = std::nullopt,
                            InfinitySide side = InfinitySide::both);

bool same_family(const ShrinkingFamily& a, const ShrinkingFamily& b);

} // namespace gfa
