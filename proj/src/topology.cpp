#include "gfa/topology.hpp"

#include <algorithm>
#include <cmath>

namespace gfa {

namespace {

constexpr double kSlopeTol = 0.05;
constexpr double kUnitBallTol = 1e-9;

} // namespace

SharpVerdict sharp_membership(const Representative& f, const SharpNeighborhood& V,
                              std::span<const double> xi, const EvalOptions& opts) {
    if (V.p < 0) throw ConfigError("sharp neighborhood: p >= 0");
    SharpVerdict out;
    out.member = true;
    Representative g = f;
    double C = 0.0, eta = 0.0;
    for (int d = 0; d <= V.p; ++d) {
        if (d > 0) g = differentiate(g, 0);
        const std::vector<double> s = sup_profile(g, V.K, xi, opts);
        SharpOrderFit of;
        of.order = d;
        of.fit = fit_loglog_tail(xi, s, 8);
        if (of.fit.has_overflow) {
            of.pass = false;
        } else if (of.fit.all_zero) {
            of.pass = true;
        } else {
            of.pass = of.fit.line.slope >= static_cast<double>(V.q) - kSlopeTol;
            if (of.pass) {
                for (size_t i = 0; i < xi.size(); ++i)
                    if (std::isfinite(s[i]) && xi[i] >= of.fit.window_lo &&
                        xi[i] <= of.fit.window_hi) {
                        C = std::max(C, s[i] * std::pow(xi[i], -V.q));
                        eta = std::max(eta, xi[i]);
                    }
            }
        }
        out.member = out.member && of.pass;
        out.per_order.push_back(std::move(of));
    }
    if (out.member) {
        out.C = C;
        out.eta = eta;
    }
    return out;
}

SpaceChain build_chain(const SpaceIndex& base, int steps,
                       std::span<const double> eps_schedule, int exhaustion_rmax) {
    if (steps < 1) throw ConfigError("build_chain: steps >= 1");
    if (eps_schedule.empty()) throw ConfigError("build_chain: empty eps schedule");
    SpaceChain chain;
    chain.spaces.push_back(base);
    for (int p = 0; p < steps; ++p) {
        const SpaceIndex& cur = chain.spaces.back();
        const int n_next = 2 * cur.n + 1;
        // psi-growth from the compactness schedule: nu_r = |phi|_{K_r}/eps
        PiecewiseNu nu;
        for (int r = 1; r <= exhaustion_rmax; ++r) {
            const size_t m = std::min<size_t>(static_cast<size_t>(r), eps_schedule.size());
            nu.nu.push_back(cur.phi.cell_sup_bound(r) / eps_schedule[m - 1]);
        }
        for (size_t i = 1; i < nu.nu.size(); ++i)
            nu.nu[i] = std::max(nu.nu[i], nu.nu[i - 1]);
        WeightFunction phi_next =
            cur.phi.squared().product(WeightFunction::piecewise(nu));
        phi_next = phi_next.join_max(derivative_weight(cur.phi, cur.n));
        chain.spaces.push_back(space_index(n_next, phi_next, cur.family));
    }
    return chain;
}

namespace {

bool applicable_at(const Representative& f, const SpaceIndex& s) {
    if (!f.space()) return true;
    return f.space()->n <= s.n;
}

} // namespace

ChainCertificates certify_chain(const SpaceChain& chain,
                                std::span<const Representative> corpus, long budget,
                                double zeta_floor, const EvalOptions& opts) {
    if (chain.spaces.size() < 2)
        throw ConfigError("certify_chain: need a chain with >= 2 spaces");
    ChainCertificates out;
    out.all_pass = true;
    std::vector<bool> covered(corpus.size(), false);

    for (size_t p = 0; p + 1 < chain.spaces.size(); ++p) {
        const SpaceIndex& sp = chain.spaces[p];
        const SpaceIndex& sq = chain.spaces[p + 1];
        std::vector<size_t> idx;
        for (size_t i = 0; i < corpus.size(); ++i)
            if (applicable_at(corpus[i], sp)) {
                idx.push_back(i);
                covered[i] = true;
            }
        if (idx.empty()) continue;

        const SampleGrid grid_p = sample(make_sector(sp.n, sp.family), budget, zeta_floor);
        const SampleGrid grid_q = sample(make_sector(sq.n, sq.family), budget, zeta_floor);

        // norm stability at the current index
        for (size_t i : idx) {
            const NormCertificate c = norm_estimate(corpus[i], sp, grid_p, opts);
            out.norms.push_back({static_cast<int>(p), i, c.estimate, c.stable});
            out.all_pass = out.all_pass && c.stable && std::isfinite(c.estimate);
        }
        // derivative lands in the next space with a stable estimate
        for (size_t i : idx) {
            const Representative df = differentiate(corpus[i], 0);
            const NormCertificate c = norm_estimate(df, sq, grid_q, opts);
            out.derivatives.push_back({static_cast<int>(p), i, c.estimate, c.stable});
            out.all_pass = out.all_pass && c.stable && std::isfinite(c.estimate);
        }
        // product certificates on a common grid (grid_q lies in both sectors)
        const auto pairs = square_enumeration(idx.size(), idx.size());
        size_t taken = 0;
        for (const auto& [ai, bj] : pairs) {
            if (taken >= 10) break;
            if (ai > bj) continue; // unordered pairs once
            ++taken;
            const size_t i = idx[ai], j = idx[bj];
            const double li = weighted_sup_on_grid(corpus[i], sp, grid_q, nullptr, opts);
            const double lj = weighted_sup_on_grid(corpus[j], sp, grid_q, nullptr, opts);
            const double lhs =
                weighted_sup_on_grid(mul(corpus[i], corpus[j]), sq, grid_q, nullptr, opts);
            const bool pass = lhs <= li * lj * (1.0 + 1e-9) + 1e-300;
            out.products.push_back({static_cast<int>(p), i, j, lhs, li * lj, pass});
            out.all_pass = out.all_pass && pass;
        }
    }
    out.applicable_elements =
        static_cast<size_t>(std::count(covered.begin(), covered.end(), true));
    out.all_pass = out.all_pass && out.applicable_elements == corpus.size();
    return out;
}

BoundedVerdict bounded_in(const SpaceChain& chain, std::span<const Representative> fs,
                          long budget, double zeta_floor, const EvalOptions& opts) {
    BoundedVerdict out;
    for (size_t p = 0; p < chain.spaces.size(); ++p) {
        const SpaceIndex& s = chain.spaces[p];
        SampleGrid grid;
        try {
            grid = sample(make_sector(s.n, s.family), budget, zeta_floor);
        } catch (const Error&) {
            continue;
        }
        bool ok = true;
        std::vector<double> ests;
        double bound = 0.0;
        for (const Representative& f : fs) {
            NormCertificate c;
            try {
                c = norm_estimate(f, s, grid, opts);
            } catch (const Error&) {
                ok = false;
                break;
            }
            if (!std::isfinite(c.estimate) || !c.stable) {
                ok = false;
                break;
            }
            ests.push_back(c.estimate);
            bound = std::max(bound, c.estimate);
        }
        if (ok) {
            out.found = true;
            out.p = static_cast<int>(p);
            out.bound = bound;
            out.estimates = std::move(ests);
            return out;
        }
    }
    return out;
}

namespace {

struct GridEvaluation {
    std::vector<std::vector<Cplx>> vals; // [element][point]
    std::vector<Cplx> limit;
    std::vector<double> phi;      // phi(x) per point
    std::vector<double> zeta_pow; // |zeta|^{n+1} per point
    std::vector<int> cell;
    int max_cell = 1;
};

GridEvaluation evaluate_sequence(const SpaceIndex& source,
                                 std::span<const Representative> fs,
                                 const Representative* f_limit,
                                 const SampleGrid& grid, const EvalOptions& opts,
                                 std::string* limit_note) {
    GridEvaluation ge;
    const Ambient& om = source.family.ambient();
    const int n = source.n;
    ge.vals.resize(fs.size());
    std::vector<Cplx> z(static_cast<size_t>(grid.domain.dimension()));
    for (const GridPoint& p : grid.points) {
        ge.phi.push_back(source.phi(p.x, om));
        ge.zeta_pow.push_back(std::pow(std::abs(p.zeta), n + 1));
        ge.cell.push_back(p.cell);
        ge.max_cell = std::max(ge.max_cell, p.cell);
    }
    for (size_t q = 0; q < fs.size(); ++q) {
        ge.vals[q].reserve(grid.points.size());
        for (const GridPoint& p : grid.points) {
            for (size_t i = 0; i < z.size(); ++i) z[i] = Cplx(p.x[i], p.y[i]);
            ge.vals[q].push_back(fs[q](std::span<const Cplx>(z), p.zeta, opts));
        }
    }
    if (f_limit) {
        ge.limit.reserve(grid.points.size());
        for (const GridPoint& p : grid.points) {
            for (size_t i = 0; i < z.size(); ++i) z[i] = Cplx(p.x[i], p.y[i]);
            ge.limit.push_back((*f_limit)(std::span<const Cplx>(z), p.zeta, opts));
        }
        if (limit_note) *limit_note = "limit supplied";
    } else {
        ge.limit = ge.vals.back();
        if (limit_note) *limit_note = "limit taken as the last sequence element";
    }
    return ge;
}

void check_unit_ball(const GridEvaluation& ge, const SampleGrid& grid, int n) {
    for (size_t q = 0; q < ge.vals.size(); ++q) {
        double est = 0.0;
        for (size_t i = 0; i < grid.points.size(); ++i) {
            const double m = std::abs(ge.vals[q][i]);
            if (!std::isfinite(m))
                throw ConfigError("sequence element " + std::to_string(q + 1) +
                                  " overflows on the grid (violates the uniform bound)");
            est = std::max(est, std::pow(std::abs(grid.points[i].zeta), n) * m /
                                    ge.phi[i]);
        }
        if (est > 1.0 + kUnitBallTol)
            throw ConfigError("sequence element " + std::to_string(q + 1) +
                              " lies outside the unit ball (estimate " +
                              std::to_string(est) + " > 1)");
    }
}

} // namespace

PsiCertificate construct_psi(const SpaceIndex& source,
                             std::span<const Representative> fs,
                             const Representative* f_limit,
                             std::span<const double> eps_schedule,
                             const SampleGrid& vnp1_grid, const EvalOptions& opts) {
    if (fs.empty()) throw ConfigError("construct_psi: empty sequence");
    if (eps_schedule.empty()) throw ConfigError("construct_psi: empty eps schedule");
    for (size_t i = 0; i + 1 < eps_schedule.size(); ++i)
        if (!(eps_schedule[i + 1] < eps_schedule[i]))
            throw ConfigError("construct_psi: eps schedule must decrease");
    if (vnp1_grid.domain.n != source.n + 1)
        throw ConfigError("construct_psi: grid must sample V_{n+1}");

    PsiCertificate cert;
    cert.source = source;
    cert.sequence_length = fs.size();
    cert.grid_points = vnp1_grid.points.size();

    GridEvaluation ge =
        evaluate_sequence(source, fs, f_limit, vnp1_grid, opts, &cert.limit_note);
    check_unit_ball(ge, vnp1_grid, source.n);

    // sampled |phi|_{K_r}: cumulative max over exhaustion cells
    std::vector<double> cellmax(static_cast<size_t>(ge.max_cell), 0.0);
    for (size_t i = 0; i < ge.phi.size(); ++i) {
        auto& slot = cellmax[static_cast<size_t>(ge.cell[i] - 1)];
        slot = std::max(slot, ge.phi[i]);
    }
    cert.phi_sup.resize(cellmax.size());
    double running = 0.0;
    for (size_t r = 0; r < cellmax.size(); ++r) {
        running = std::max(running, cellmax[r]);
        cert.phi_sup[r] = running > 0.0 ? running : 1.0;
    }

    // nu_r updates: step m freezes nu_1..nu_{m-1} and raises the rest
    cert.nu.assign(cert.phi_sup.size(), 0.0);
    for (size_t m = 1; m <= eps_schedule.size(); ++m) {
        const double eps = eps_schedule[m - 1];
        for (size_t r = m; r <= cert.nu.size(); ++r)
            cert.nu[r - 1] = std::max(cert.nu[r - 1], cert.phi_sup[r - 1] / eps);
    }
    for (size_t r = 1; r < cert.nu.size(); ++r)
        cert.nu[r] = std::max(cert.nu[r], cert.nu[r - 1]);
    PiecewiseNu table;
    table.nu = cert.nu;
    cert.psi = WeightFunction::piecewise(table);

    // uniform-convergence stage (Eq-13 analogue with the source weight):
    // ratio_q = max over grid of |f_q - f| |zeta|^{n+1} / phi(x)
    const size_t Q = fs.size();
    std::vector<double> ratio(Q, 0.0), ratio_psi(Q, 0.0);
    const Ambient& om = source.family.ambient();
    for (size_t i = 0; i < vnp1_grid.points.size(); ++i) {
        const double psi_x = cert.psi(vnp1_grid.points[i].x, om);
        for (size_t q = 0; q < Q; ++q) {
            const double d = std::abs(ge.vals[q][i] - ge.limit[i]);
            ratio[q] = std::max(ratio[q], d * ge.zeta_pow[i] / ge.phi[i]);
            ratio_psi[q] = std::max(ratio_psi[q], d * ge.zeta_pow[i] / psi_x);
        }
    }
    std::vector<double> suffix(Q), suffix_psi(Q);
    double acc = 0.0, acc_psi = 0.0;
    for (size_t q = Q; q-- > 0;) {
        acc = std::max(acc, ratio[q]);
        acc_psi = std::max(acc_psi, ratio_psi[q]);
        suffix[q] = acc;
        suffix_psi[q] = acc_psi;
    }

    cert.verified = true;
    for (double eps : eps_schedule) {
        int q0 = -1;
        for (size_t q = 0; q < Q; ++q)
            if (suffix[q] <= eps) {
                q0 = static_cast<int>(q) + 1;
                break;
            }
        if (q0 < 0) {
            cert.verified = false;
            cert.violations.push_back("no q0 for eps = " + std::to_string(eps) +
                                      " within the available sequence");
            cert.q0_table.emplace_back(eps, static_cast<int>(Q) + 1);
            continue;
        }
        cert.q0_table.emplace_back(eps, q0);
        // final inequality with the constructed psi, for all q >= q0
        if (suffix_psi[static_cast<size_t>(q0 - 1)] > eps) {
            cert.verified = false;
            cert.violations.push_back("final bound violated at eps = " +
                                      std::to_string(eps));
        }
    }
    return cert;
}

ExtractionReport verify_compact_extraction(std::span<const Representative> fs,
                                           const SpaceIndex& source,
                                           std::span<const double> eps_schedule,
                                           const SampleGrid& vnp1_grid,
                                           const EvalOptions& opts) {
    if (fs.size() < 2)
        throw ConfigError("compact extraction: need at least two sequence elements");
    ExtractionReport rep;

    std::string limit_note;
    GridEvaluation ge =
        evaluate_sequence(source, fs, nullptr, vnp1_grid, opts, &limit_note);
    check_unit_ball(ge, vnp1_grid, source.n); // throws on premise violation
    rep.uniformly_bounded = true;
    for (size_t q = 0; q < fs.size(); ++q) {
        double est = 0.0;
        for (size_t i = 0; i < vnp1_grid.points.size(); ++i)
            est = std::max(est, std::pow(std::abs(vnp1_grid.points[i].zeta), source.n) *
                                    std::abs(ge.vals[q][i]) / ge.phi[i]);
        rep.premise_estimates.push_back(est);
    }

    // coarsest probe compact: cell = 1, |zeta| >= eps_1/2 (Eq-12-style window)
    std::vector<size_t> probe_idx;
    const double zmin = eps_schedule.empty() ? 0.0 : eps_schedule.front() / 2.0;
    int min_cell = ge.max_cell;
    for (int c : ge.cell) min_cell = std::min(min_cell, c);
    for (size_t i = 0; i < vnp1_grid.points.size(); ++i)
        if (ge.cell[i] == min_cell && std::abs(vnp1_grid.points[i].zeta) >= zmin)
            probe_idx.push_back(i);
    if (probe_idx.empty())
        for (size_t i = 0; i < vnp1_grid.points.size(); ++i)
            if (ge.cell[i] == min_cell) probe_idx.push_back(i);

    auto probe_dist = [&](size_t a, size_t b) {
        double d = 0.0;
        for (size_t i : probe_idx)
            d = std::max(d, std::abs(ge.vals[a][i] - ge.vals[b][i]));
        return d;
    };

    // greedy thinning: keep elements whose successive distances halve
    rep.subsequence.push_back(0);
    double last_d = kInf;
    for (size_t j = 1; j < fs.size(); ++j) {
        const double d = probe_dist(rep.subsequence.back(), j);
        if (last_d == kInf || d <= 0.5 * last_d) {
            rep.subsequence.push_back(j);
            last_d = d;
        }
    }
    if (rep.subsequence.size() < 2) {
        rep.note = "no Cauchy subsequence found within budget; cannot certify";
        return rep;
    }

    std::vector<Representative> sub;
    for (size_t j : rep.subsequence) sub.push_back(fs[j]);
    rep.psi = construct_psi(source, sub, nullptr, eps_schedule, vnp1_grid, opts);
    rep.certified = rep.psi.verified;
    rep.note = "subsequence limit " + rep.psi.limit_note;
    return rep;
}

L1Hull make_hull(std::vector<Representative> generators) {
    if (generators.empty()) throw ConfigError("hull: need generators");
    return L1Hull{std::move(generators)};
}

std::vector<std::pair<size_t, size_t>> square_enumeration(size_t rows, size_t cols) {
    std::vector<std::pair<size_t, size_t>> out;
    out.reserve(rows * cols);
    const size_t smax = std::max(rows, cols);
    for (size_t s = 0; s < smax; ++s) {
        for (size_t i = 0; i <= s; ++i)
            if (i < rows && s < cols) out.emplace_back(i, s);
        for (size_t j = s; j-- > 0;)
            if (s < rows && j < cols) out.emplace_back(s, j);
    }
    return out;
}

L1Hull hull_product(const L1Hull& a, const L1Hull& b) {
    L1Hull out;
    for (const auto& [i, j] : square_enumeration(a.generators.size(), b.generators.size()))
        out.generators.push_back(mul(a.generators[i], b.generators[j]));
    return out;
}

bool hull_member(const L1Hull& h, std::span<const Cplx> weights,
                 Representative* combination, double tol) {
    if (weights.size() > h.generators.size())
        throw ConfigError("hull_member: more weights than generators");
    double mass = 0.0;
    for (const Cplx& w : weights) mass += std::abs(w);
    const bool member = mass <= 1.0 + tol;
    if (member && combination && !weights.empty()) {
        Representative acc = scale(weights[0], h.generators[0]);
        for (size_t i = 1; i < weights.size(); ++i)
            acc = add(acc, scale(weights[i], h.generators[i]));
        *combination = acc;
    }
    return member;
}

} // namespace gfa
