#include "gfa/norms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gfa {

GridProvenance provenance_of(const SampleGrid& g) {
    GridProvenance p;
    p.n = g.domain.n;
    p.budget = g.budget;
    p.zeta_floor = g.zeta_floor;
    p.seed = g.seed;
    p.refine_level = g.refine_level;
    p.count = g.points.size();
    p.strategy = g.strategy;
    return p;
}

double weighted_sup_on_grid(const Representative& f, const SpaceIndex& s,
                            const SampleGrid& grid, KernelStats* stats,
                            const EvalOptions& base) {
    EvalOptions opts = base;
    opts.stats = stats;
    const Ambient& omega = s.family.ambient();
    double best = 0.0;
    std::vector<Cplx> z(static_cast<size_t>(grid.domain.dimension()));
    for (const GridPoint& p : grid.points) {
        for (size_t i = 0; i < z.size(); ++i) z[i] = Cplx(p.x[i], p.y[i]);
        Cplx v;
        try {
            v = f(std::span<const Cplx>(z), p.zeta, opts);
        } catch (const EvalError& e) {
            std::ostringstream os;
            os << e.what() << " [at x=" << p.x[0] << ", y=" << p.y[0]
               << ", zeta=" << p.zeta.real() << (p.zeta.imag() < 0 ? "-" : "+")
               << std::abs(p.zeta.imag()) << "i]";
            throw EvalError(os.str(), p.zeta);
        }
        const double mag = std::abs(v);
        if (!std::isfinite(mag)) return kInf;
        const double w = std::pow(std::abs(p.zeta), s.n) * mag / s.phi(p.x, omega);
        best = std::max(best, w);
    }
    return best;
}

NormCertificate norm_estimate(const Representative& f, const SpaceIndex& s,
                              const SampleGrid& grid, const EvalOptions& base) {
    NormCertificate cert;
    cert.space = s;
    cert.coarse = weighted_sup_on_grid(f, s, grid, &cert.kernel, base);
    const SampleGrid fine = refine(grid);
    cert.estimate = weighted_sup_on_grid(f, s, fine, &cert.kernel, base);
    cert.grid = provenance_of(fine);
    if (std::isfinite(cert.estimate)) {
        const double denom = std::max(cert.estimate, 1e-300);
        cert.stable = std::abs(cert.estimate - cert.coarse) < 0.01 * denom;
    } else {
        cert.stable = false;
        cert.note = "estimate overflowed: no finite bound at this index";
    }
    return cert;
}

std::vector<double> CompactSpec::grid() const {
    if (!(hi >= lo)) throw ConfigError("compact spec: hi >= lo required");
    const int m = std::max(1, points | 1); // odd, so midpoints are included
    return linspace(lo, hi, m);
}

std::vector<double> sup_profile(const Representative& f, const CompactSpec& K,
                                std::span<const double> xi, const EvalOptions& base) {
    const std::vector<double> xs = K.grid();
    std::vector<double> out;
    out.reserve(xi.size());
    for (double x_xi : xi) {
        double best = 0.0;
        for (double x : xs) {
            const Cplx v = f.at_real(x, x_xi, base);
            const double m = std::abs(v);
            if (!std::isfinite(m)) {
                best = kInf;
                break;
            }
            best = std::max(best, m);
        }
        out.push_back(best);
    }
    return out;
}

namespace {

constexpr double kSlopeTol = 0.05;

} // namespace

ModerateVerdict moderateness_check(const Representative& f, const CompactSpec& K,
                                   std::span<const double> xi, int N_max,
                                   const EvalOptions& base) {
    if (N_max < 0) throw ConfigError("moderateness: N_max >= 0");
    ModerateVerdict v;
    const std::vector<double> s = sup_profile(f, K, xi, base);
    v.fit = fit_loglog_tail(xi, s, 8);
    if (v.fit.has_overflow) {
        v.overflow = true;
        v.pass = false;
        return v;
    }
    if (v.fit.all_zero) {
        v.zero = true;
        v.pass = true;
        v.N = 0;
        v.constant = 0.0;
        return v;
    }
    const double slope = v.fit.line.slope;
    const int needed = std::max(0, static_cast<int>(std::ceil(-slope - kSlopeTol)));
    v.N = needed;
    v.pass = needed <= N_max;
    if (v.pass) {
        double c = 0.0;
        for (size_t i = 0; i < xi.size(); ++i)
            if (std::isfinite(s[i]) && xi[i] >= v.fit.window_lo && xi[i] <= v.fit.window_hi)
                c = std::max(c, s[i] * std::pow(xi[i], needed));
        v.constant = c;
    }
    return v;
}

NegligibleVerdict negligibility_check(const Representative& f, const CompactSpec& K,
                                      std::span<const double> xi, int q_max,
                                      const EvalOptions& base) {
    if (q_max < 0) throw ConfigError("negligibility: q_max >= 0");
    NegligibleVerdict v;
    const std::vector<double> s = sup_profile(f, K, xi, base);
    v.fit = fit_loglog_tail(xi, s, 8);
    if (v.fit.has_overflow) {
        v.negligible = false;
        v.fail_q = 0;
        return v;
    }
    if (v.fit.all_zero) {
        v.zero = true;
        v.negligible = true;
        v.fail_q = -1;
        v.constant = 0.0;
        return v;
    }
    const double slope = v.fit.line.slope;
    v.negligible = true;
    v.fail_q = -1;
    for (int q = 0; q <= q_max; ++q) {
        if (!(slope >= static_cast<double>(q) - kSlopeTol)) {
            v.negligible = false;
            v.fail_q = q;
            break;
        }
    }
    if (v.negligible) {
        double c = 0.0;
        for (size_t i = 0; i < xi.size(); ++i)
            if (std::isfinite(s[i]) && s[i] > 0.0 && xi[i] >= v.fit.window_lo &&
                xi[i] <= v.fit.window_hi)
                c = std::max(c, s[i] * std::pow(xi[i], -q_max));
        v.constant = c;
    }
    return v;
}

} // namespace gfa
