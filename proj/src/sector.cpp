#include "gfa/sector.hpp"

#include <cmath>

namespace gfa {

std::string to_string(Branch b) {
    switch (b) {
        case Branch::none: return "none";
        case Branch::A: return "A";
        case Branch::B: return "B";
    }
    return "?";
}

SectorDomain make_sector(int n, ShrinkingFamily family) {
    if (n < 1) throw ConfigError("sector: n must be >= 1");
    return SectorDomain{n, std::move(family)};
}

Branch classify(const SectorDomain& V, std::span<const double> x,
                std::span<const double> y, Cplx zeta) {
    const int n = V.n;
    const double bound = 1.0 / n;
    const double mod = std::abs(zeta);
    if (!(mod > 0.0) || !(mod < bound)) return Branch::none;
    if (x.size() != y.size() || static_cast<int>(x.size()) != V.dimension())
        return Branch::none;

    // A_n first; its predicate excludes x in O_{n+1} by construction.
    if (V.family.ambient().contains(x) && !V.family.in_O(n + 1, x) &&
        std::abs(std::arg(zeta)) < bound) {
        bool y_ok = true;
        for (double yi : y)
            if (!(std::abs(yi) < bound * mod)) { y_ok = false; break; }
        if (y_ok) return Branch::A;
    }

    if (V.family.in_O(n, x)) {
        bool y_ok = true;
        for (double yi : y)
            if (!(std::abs(yi) < bound)) { y_ok = false; break; }
        if (y_ok) return Branch::B;
    }
    return Branch::none;
}

} // namespace gfa
