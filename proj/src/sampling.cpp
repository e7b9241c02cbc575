#include "gfa/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

namespace gfa {

namespace {

constexpr double kEdge = 1e-3;   // relative pull-back from open boundaries

double zeta_top(int n) { return (1.0 / n) * (1.0 - kEdge); }

// linspace strictly inside an open interval
std::vector<double> interior_linspace(const Interval& iv, int count) {
    const double margin = 1e-6 * std::min(1.0, iv.length());
    return linspace(iv.lo + margin, iv.hi - margin, count);
}

std::vector<std::vector<double>> section_points(const std::vector<Interval>& sections,
                                                const Interval& window, int count) {
    std::vector<std::vector<double>> out;
    for (const Interval& s : sections) {
        Interval c = intersect(s, window);
        if (c.empty() || !(c.length() > 0.0)) continue;
        out.push_back(interior_linspace(c, count));
    }
    return out;
}

void emit_block(SampleGrid& g, const std::vector<std::vector<double>>& xs,
                const std::vector<double>& args, Branch expected, double ybound_ratio) {
    const SectorDomain& V = g.domain;
    const int n = V.n;
    for (double mod : g.zeta_mods) {
        for (const std::vector<double>& sec : xs) {
            for (double xv : sec) {
                std::vector<double> x{xv};
                const int cell = V.family.ambient().exhaustion_cell(x);
                for (double th : args) {
                    const Cplx zeta = std::polar(mod, th);
                    const double ybound =
                        (expected == Branch::A) ? ybound_ratio * mod / n : ybound_ratio / n;
                    for (double fr : g.yfrac) {
                        std::vector<double> y{fr * ybound};
                        const Branch got = classify(V, x, y, zeta);
                        if (got == Branch::none)
                            throw NumericError("sample: emitted point failed the membership predicate");
                        g.points.push_back(GridPoint{x, y, zeta, got, cell});
                    }
                }
            }
        }
    }
}

void build_points(SampleGrid& g) {
    g.points.clear();
    emit_block(g, g.xs_A, g.args_A, Branch::A, 1.0 - kEdge);
    emit_block(g, g.xs_B, g.args_B, Branch::B, 1.0 - kEdge);
    if (g.points.empty())
        throw NumericError("sample: budget unattainable for this domain");
}

} // namespace

SampleGrid sample(const SectorDomain& V, long budget, double zeta_floor,
                  std::uint64_t seed) {
    if (budget < 1) throw ConfigError("sample: budget must be >= 1");
    const int n = V.n;
    const double top = zeta_top(n);
    if (!(zeta_floor > 0.0) || !(zeta_floor < top))
        throw ConfigError("sample: zeta_floor must satisfy 0 < floor < 1/n");
    if (V.dimension() != 1)
        throw ConfigError("sample: v1 grids support k = 1 (predicates are general)");

    SampleGrid g;
    g.domain = V;
    g.budget = budget;
    g.zeta_floor = zeta_floor;
    g.seed = seed;

    const double decades = std::log10(top / zeta_floor);
    long n_zeta_l = std::lround(40.0 * decades) + 1;
    n_zeta_l = std::clamp<long>(n_zeta_l, 2, std::max<long>(2, budget));
    const int n_zeta = static_cast<int>(n_zeta_l);
    g.zeta_mods = logspace(zeta_floor, top, n_zeta);

    const long per_zeta = std::max<long>(2, budget / n_zeta);
    // split the per-|zeta| allowance between the two branches
    const int n_arg_A = 5, n_arg_B = 8, n_y = 3;
    long nxA = std::max<long>(1, per_zeta / (2 * n_arg_A * n_y));
    long nxB = std::max<long>(1, per_zeta / (2 * n_arg_B * n_y));

    const double adeg = (1.0 / n) * (1.0 - kEdge);
    g.args_A = linspace(-adeg, adeg, n_arg_A);
    g.args_B = linspace(-kPi + 2.0 * kPi / n_arg_B, kPi, n_arg_B);
    g.yfrac = linspace(-(1.0 - kEdge), 1.0 - kEdge, n_y);

    // x candidates from the compact exhaustion
    int r = std::max(3, n + 2);
    if (!V.family.base_point().empty())
        r = std::max<int>(r, static_cast<int>(std::ceil(std::abs(V.family.base_point()[0]))) + 2);
    for (; r <= 64; ++r) {
        const Interval window = V.family.ambient().exhaustion_interval(r);
        if (window.empty()) continue;
        g.xs_A = section_points(V.family.complement_intervals(n + 1), window,
                                static_cast<int>(nxA));
        g.xs_B = section_points(V.family.O_intervals(n), window, static_cast<int>(nxB));
        if (!g.xs_A.empty() || !g.xs_B.empty()) break;
    }

    build_points(g);
    return g;
}

SampleGrid refine(const SampleGrid& grid) {
    SampleGrid g = grid;
    g.refine_level = grid.refine_level + 1;
    g.zeta_floor = grid.zeta_floor / 2.0;

    g.zeta_mods = midpoint_refine(grid.zeta_mods, /*log_scale=*/true);
    // extend below the old floor at the refined spacing
    if (g.zeta_mods.size() >= 2) {
        const double ratio = g.zeta_mods[1] / g.zeta_mods[0];
        std::vector<double> ext;
        double v = g.zeta_mods.front();
        while (v / ratio >= g.zeta_floor * (1.0 - 1e-12)) {
            v /= ratio;
            ext.push_back(v);
        }
        std::reverse(ext.begin(), ext.end());
        ext.insert(ext.end(), g.zeta_mods.begin(), g.zeta_mods.end());
        g.zeta_mods = std::move(ext);
    }

    // other axes unchanged: the refined grid stays a superset and the
    // estimate remains monotone, while the zeta resolution (which drives
    // the weighted sups) doubles and the floor halves
    build_points(g);
    return g;
}

std::vector<GridPoint> random_points(const SectorDomain& V, int count,
                                     std::uint64_t seed, double zeta_floor) {
    if (V.dimension() != 1)
        throw ConfigError("random_points: v1 supports k = 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int n = V.n;
    const double top = zeta_top(n);

    const auto secs_A = V.family.complement_intervals(n + 1);
    const auto secs_B = V.family.O_intervals(n);
    const Interval window = V.family.ambient().exhaustion_interval(std::max(3, n + 3));

    auto pick_x = [&](const std::vector<Interval>& secs) -> std::optional<double> {
        std::vector<Interval> cand;
        for (const Interval& s : secs) {
            Interval c = intersect(s, window);
            if (!c.empty() && c.length() > 0.0) cand.push_back(c);
        }
        if (cand.empty()) return std::nullopt;
        const auto& c = cand[static_cast<size_t>(rng() % cand.size())];
        const double m = 1e-9 * std::min(1.0, c.length());
        return c.lo + m + (c.length() - 2 * m) * unit(rng);
    };

    std::vector<GridPoint> out;
    int guard = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++guard > 100 * count + 1000)
            throw NumericError("random_points: rejection sampling stalled");
        const bool branch_a = (rng() & 1) != 0;
        const double mod = zeta_floor * std::pow(top / zeta_floor, unit(rng));
        GridPoint p;
        if (branch_a) {
            auto x = pick_x(secs_A);
            if (!x) continue;
            const double th = (2.0 * unit(rng) - 1.0) * (1.0 / n) * (1 - 1e-6);
            p.x = {*x};
            p.zeta = std::polar(mod, th);
            p.y = {(2.0 * unit(rng) - 1.0) * (mod / n) * (1 - 1e-6)};
        } else {
            auto x = pick_x(secs_B);
            if (!x) continue;
            const double th = -kPi + 2.0 * kPi * unit(rng);
            p.x = {*x};
            p.zeta = std::polar(mod, th);
            p.y = {(2.0 * unit(rng) - 1.0) * (1.0 / n) * (1 - 1e-6)};
        }
        p.branch = classify(V, p.x, p.y, p.zeta);
        if (p.branch == Branch::none) continue;
        p.cell = V.family.ambient().exhaustion_cell(p.x);
        out.push_back(std::move(p));
    }
    return out;
}

SectorSample sector_sample(int n, double zeta_floor, int per_decade, int n_args) {
    if (n < 1) throw ConfigError("sector_sample: n >= 1");
    const double top = zeta_top(n);
    if (!(zeta_floor > 0.0) || !(zeta_floor < top))
        throw ConfigError("sector_sample: floor must satisfy 0 < floor < 1/n");
    SectorSample s;
    s.n = n;
    s.zeta_floor = zeta_floor;
    const double decades = std::log10(top / zeta_floor);
    const int m = std::max(2, static_cast<int>(std::lround(per_decade * decades)) + 1);
    s.mods = logspace(zeta_floor, top, m);
    const double adeg = (1.0 / n) * (1.0 - kEdge);
    s.args = linspace(-adeg, adeg, std::max(1, n_args) | 1);
    for (double mod : s.mods)
        for (double th : s.args) s.zetas.push_back(std::polar(mod, th));
    return s;
}

SectorSample refine(const SectorSample& in) {
    SectorSample s;
    s.n = in.n;
    s.zeta_floor = in.zeta_floor / 2.0;
    s.mods = midpoint_refine(in.mods, true);
    if (s.mods.size() >= 2) {
        const double ratio = s.mods[1] / s.mods[0];
        std::vector<double> ext;
        double v = s.mods.front();
        while (v / ratio >= s.zeta_floor * (1.0 - 1e-12)) {
            v /= ratio;
            ext.push_back(v);
        }
        std::reverse(ext.begin(), ext.end());
        ext.insert(ext.end(), s.mods.begin(), s.mods.end());
        s.mods = std::move(ext);
    }
    s.args = midpoint_refine(in.args, false);
    for (double mod : s.mods)
        for (double th : s.args) s.zetas.push_back(std::polar(mod, th));
    return s;
}

} // namespace gfa
