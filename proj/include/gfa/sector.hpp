#pragma once

#include <complex>
#include <span>
#include <string>

#include "gfa/family.hpp"

namespace gfa {

enum class Branch { none, A, B };

std::string to_string(Branch b);

/// The open set V_n = A_n union B_n in (x, y, zeta) coordinates.
struct SectorDomain {
    int n = 1;
    ShrinkingFamily family;

    int dimension() const { return family.dimension(); }
};

SectorDomain make_sector(int n, ShrinkingFamily family);

/// Branch classification; Branch::none means the point is not in V_n.
/// A_n: x in Omega, x not in O_{n+1}, |arg zeta| < 1/n, 0 < |zeta| < 1/n,
///      |y_i| < |zeta|/n.
/// B_n: x in O_n, 0 < |zeta| < 1/n, |y_i| < 1/n.
Branch classify(const SectorDomain& V, std::span<const double> x,
                std::span<const double> y, Cplx zeta);

inline bool contains(const SectorDomain& V, std::span<const double> x,
                     std::span<const double> y, Cplx zeta) {
    return classify(V, x, y, zeta) != Branch::none;
}

} // namespace gfa
