#pragma once

#include <cstdint>
#include <vector>

#include "gfa/sector.hpp"

namespace gfa {

struct GridPoint {
    std::vector<double> x, y;
    Cplx zeta;
    Branch branch = Branch::none;
    int cell = 1; // exhaustion cell of x
};

/// Deterministic sample of V_n. Axes are stored explicitly so that refine()
/// yields a strict superset of the points (weighted sups are then monotone
/// under refinement).
struct SampleGrid {
    SectorDomain domain;
    long budget = 0;
    double zeta_floor = 1e-8;
    std::uint64_t seed = 0;
    int refine_level = 0;
    std::string strategy = "structured-v1";

    std::vector<double> zeta_mods;
    std::vector<double> args_A, args_B;
    std::vector<double> yfrac;
    std::vector<std::vector<double>> xs_A, xs_B; // per interval section

    std::vector<GridPoint> points;
};

/// |zeta| log-spaced in [zeta_floor, 1/n), arg and y linearly spaced inside
/// the branch bounds, x drawn from the compact exhaustion. Every emitted
/// point passes `contains`.
SampleGrid sample(const SectorDomain& V, long budget, double zeta_floor,
                  std::uint64_t seed = 0);

/// Refined grid: doubled axis density (old positions kept) and halved
/// zeta floor.
SampleGrid refine(const SampleGrid& grid);

/// Seeded random points of V_n (for property checks).
std::vector<GridPoint> random_points(const SectorDomain& V, int count,
                                     std::uint64_t seed, double zeta_floor = 1e-6);

/// zeta-only sector sample: |arg zeta| < 1/n, zeta_floor <= |zeta| < 1/n.
/// Houses the sampling behind the generalized-number norm.
struct SectorSample {
    int n = 1;
    double zeta_floor = 1e-6;
    std::vector<double> mods, args;
    std::vector<Cplx> zetas;
};

SectorSample sector_sample(int n, double zeta_floor, int per_decade = 40,
                           int n_args = 9);
SectorSample refine(const SectorSample& s);

} // namespace gfa
