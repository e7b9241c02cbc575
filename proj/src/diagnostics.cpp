#include "gfa/diagnostics.hpp"

#include <algorithm>
#include <cmath>

namespace gfa {

NullTestReport null_test(const Representative& f, const ShrinkingFamily& fam, int n,
                         std::span<const std::vector<double>> probes, int J, double tol,
                         double radius, const EvalOptions& opts) {
    if (probes.empty()) throw ConfigError("null_test: need at least one probe point");
    if (!(tol > 0.0)) throw ConfigError("null_test: tol must be positive");
    NullTestReport rep;
    rep.tol = tol;
    rep.J = J;
    rep.radius = radius > 0.0 ? radius : 1.0 / (2.0 * n);

    // stage 1: Laurent coefficients at each probe
    for (const std::vector<double>& x : probes) {
        LaurentProbe probe;
        probe.x = x;
        try {
            probe.series = laurent(f, fam, n, x, rep.radius, J, opts);
            probe.have_series = true;
            const auto [jdom, adom] = probe.series.dominant();
            if (probe.series.residual >= tol) {
                probe.issue = "reconstruction residual " +
                              std::to_string(probe.series.residual) +
                              " above tolerance; coefficients inconclusive";
            } else if (adom >= tol) {
                probe.computed = true;
                rep.probes.push_back(probe);
                rep.zero = false;
                rep.witness.kind = NullWitness::Kind::coefficient;
                rep.witness.x = x;
                rep.witness.j = jdom;
                rep.witness.a = probe.series.a(jdom);
                return rep;
            } else {
                probe.computed = true;
            }
        } catch (const Error& e) {
            probe.issue = e.what();
        }
        rep.probes.push_back(std::move(probe));
    }

    // stage 2: sector-norm probe (catches exp(-1/zeta^2)-type elements whose
    // real-axis data vanish to all polynomial orders)
    for (size_t i = 0; i < probes.size(); ++i) {
        GeneralizedNumber pv = pointvalue(f, probes[i]);
        const GnNorm gn = gn_norm(pv, n, 1e-6);
        rep.probes[i].sector_norm = gn.estimate;
        if (!(gn.estimate < tol)) {
            rep.zero = false;
            rep.witness.kind = NullWitness::Kind::norm;
            rep.witness.x = probes[i];
            rep.witness.norm = gn.estimate;
            return rep;
        }
    }

    rep.zero = true;
    return rep;
}

NullTestReport null_test(const Representative& f, int J, double tol,
                         const EvalOptions& opts) {
    if (!f.space())
        throw ConfigError("null_test: representative has no claimed space");
    const SpaceIndex& s = *f.space();
    std::vector<std::vector<double>> probes{s.family.witness(s.n)};
    return null_test(f, s.family, s.n, probes, J, tol, 0.0, opts);
}

GeneralizedNumber pointvalue(const Representative& f, std::span<const double> x) {
    const Representative pinned = pin_x(f, x);
    const int n = f.space() ? f.space()->n : 1;
    return GeneralizedNumber::from_representative(pinned, n);
}

GeneralizedNumber pointvalue(const Representative& f, double x) {
    const double xv[1] = {x};
    return pointvalue(f, std::span<const double>(xv, 1));
}

namespace {

bool support_inside_On(const TestFunction& phi, const std::optional<SpaceIndex>& s) {
    if (!s || s->family.dimension() != 1) return false;
    // exact interval arithmetic on the declared support
    const Interval supp{phi.support_lo(), phi.support_hi()};
    for (const Interval& o : s->family.O_intervals(s->n)) {
        if (supp.lo >= o.lo && supp.hi <= o.hi) return true;
    }
    return false;
}

} // namespace

PairResult pair(const Representative& f, const TestFunction& phi,
                const EvalOptions& opts) {
    if (f.space()) {
        const Ambient& om = f.space()->family.ambient();
        const double probes[2] = {phi.support_lo() + 1e-12, phi.support_hi() - 1e-12};
        for (double p : probes) {
            const double xv[1] = {p};
            if (!om.contains(xv))
                throw ConfigError("pair: test-function support must lie inside Omega");
        }
    }
    PairResult out;
    out.support_in_On = support_inside_On(phi, f.space());
    const int n = f.space() ? f.space()->n : 1;
    const Representative fcopy = f;
    const TestFunction pcopy = phi;
    const EvalOptions base = opts;
    auto fn = [fcopy, pcopy, base](Cplx zeta) -> Cplx {
        QuadOptions<double> q;
        q.abs_tol = 1e-13;
        q.rel_tol = 5e-10;
        q.max_evals = base.quad.max_evals;
        std::vector<double> bps;
        for (double h : fcopy.peak_hints())
            append_peak_ladder(&bps, h, std::abs(zeta), pcopy.support_lo(),
                               pcopy.support_hi());
        auto integrand = [&](double x) -> Cplx {
            const double pv = pcopy(x);
            if (pv == 0.0) return {0, 0};
            return fcopy(Cplx(x, 0.0), zeta, base) * pv;
        };
        return integrate_checked(integrand, pcopy.support_lo(), pcopy.support_hi(), q,
                                 std::span<const double>(bps));
    };
    out.gn = GeneralizedNumber::from_function(
        fn, n, "pair(" + f.provenance() + ", " + phi.describe() + ")");
    return out;
}

AssociationReport associate(const Representative& f, const TestFunction& phi,
                            std::span<const double> xi_grid, const EvalOptions& opts) {
    if (xi_grid.size() < 10)
        throw ConfigError("associate: xi-grid must be geometric with >= 10 points");
    AssociationReport rep;
    PairResult pr = pair(f, phi, opts);
    rep.support_in_On = pr.support_in_On;
    rep.xi.assign(xi_grid.begin(), xi_grid.end());
    rep.values.reserve(xi_grid.size());
    for (double xi : xi_grid) rep.values.push_back(pr.gn(Cplx(xi, 0.0)));
    rep.extrapolation = richardson_extrapolate(rep.xi, rep.values, 1e-3);
    return rep;
}

} // namespace gfa
