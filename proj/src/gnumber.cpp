#include "gfa/gnumber.hpp"

#include <algorithm>
#include <cmath>

namespace gfa {

GeneralizedNumber GeneralizedNumber::from_expression(ExprPtr zeta_expr, int n,
                                                     std::string provenance) {
    if (!zeta_expr) throw ConfigError("generalized number: null expression");
    if (depends_on_z(zeta_expr))
        throw ConfigError("generalized number: body must depend on zeta only");
    if (n < 1) throw ConfigError("generalized number: index n >= 1");
    GeneralizedNumber g;
    g.expr_ = zeta_expr;
    g.n_ = n;
    g.provenance_ = std::move(provenance);
    g.fn_ = [zeta_expr](Cplx zeta) {
        return eval(zeta_expr, std::span<const Cplx>(), zeta);
    };
    return g;
}

GeneralizedNumber GeneralizedNumber::from_function(std::function<Cplx(Cplx)> fn, int n,
                                                   std::string provenance) {
    if (!fn) throw ConfigError("generalized number: null function");
    if (n < 1) throw ConfigError("generalized number: index n >= 1");
    GeneralizedNumber g;
    g.fn_ = std::move(fn);
    g.n_ = n;
    g.provenance_ = std::move(provenance);
    return g;
}

GeneralizedNumber GeneralizedNumber::from_representative(const Representative& f, int n) {
    if (f.dimension() != 0)
        throw ConfigError("generalized number: representative must be pinned (k = 0)");
    if (const ExprPtr* e = f.expression_body())
        return from_expression(*e, n, f.provenance());
    Representative copy = f;
    return from_function(
        [copy](Cplx zeta) { return copy(std::span<const Cplx>(), zeta); }, n,
        f.provenance());
}

Cplx GeneralizedNumber::operator()(Cplx zeta) const {
    if (!fn_) throw EvalError("empty generalized number");
    return fn_(zeta);
}

Representative GeneralizedNumber::as_representative(int dimension) const {
    if (expr_)
        return Representative::from_expression(expr_, dimension, std::nullopt,
                                               provenance_);
    throw ConfigError(
        "as_representative: only closed-form generalized numbers can be lifted");
}

GeneralizedNumber gn_add(const GeneralizedNumber& a, const GeneralizedNumber& b) {
    const int n = std::max(a.index(), b.index());
    if (a.expression() && b.expression())
        return GeneralizedNumber::from_expression(add(a.expression(), b.expression()), n,
                                                  "(" + a.provenance() + " + " +
                                                      b.provenance() + ")");
    GeneralizedNumber ca = a, cb = b;
    return GeneralizedNumber::from_function(
        [ca, cb](Cplx zeta) { return ca(zeta) + cb(zeta); }, n,
        "(" + a.provenance() + " + " + b.provenance() + ")");
}

GeneralizedNumber gn_mul(const GeneralizedNumber& a, const GeneralizedNumber& b) {
    const int n = a.index() + b.index();
    if (a.expression() && b.expression())
        return GeneralizedNumber::from_expression(mul(a.expression(), b.expression()), n,
                                                  "(" + a.provenance() + " * " +
                                                      b.provenance() + ")");
    GeneralizedNumber ca = a, cb = b;
    return GeneralizedNumber::from_function(
        [ca, cb](Cplx zeta) { return ca(zeta) * cb(zeta); }, n,
        "(" + a.provenance() + " * " + b.provenance() + ")");
}

GeneralizedNumber gn_scale(Cplx c, const GeneralizedNumber& a) {
    if (a.expression())
        return GeneralizedNumber::from_expression(mul(constant(c), a.expression()),
                                                  a.index(), a.provenance());
    GeneralizedNumber ca = a;
    return GeneralizedNumber::from_function([ca, c](Cplx zeta) { return c * ca(zeta); },
                                            a.index(), a.provenance());
}

namespace {

double sector_weighted_sup(const GeneralizedNumber& a, int n, const SectorSample& s) {
    double best = 0.0;
    for (const Cplx& zeta : s.zetas) {
        const Cplx v = a(zeta);
        const double m = std::abs(v);
        if (!std::isfinite(m)) return kInf;
        best = std::max(best, std::pow(std::abs(zeta), n) * m);
    }
    return best;
}

} // namespace

GnNorm gn_norm(const GeneralizedNumber& a, int n, double zeta_floor) {
    if (n < 1) throw ConfigError("gn_norm: n >= 1");
    GnNorm out;
    out.n = n;
    out.zeta_floor = zeta_floor;
    const SectorSample coarse = sector_sample(n, zeta_floor);
    const SectorSample fine = refine(coarse);
    out.coarse = sector_weighted_sup(a, n, coarse);
    out.estimate = sector_weighted_sup(a, n, fine);
    out.sample_count = fine.zetas.size();
    if (std::isfinite(out.estimate)) {
        out.stable =
            std::abs(out.estimate - out.coarse) < 0.01 * std::max(out.estimate, 1e-300);
    }
    return out;
}

InvertibilityVerdict gn_invertibility_probe(const GeneralizedNumber& a, int m_max,
                                            double zeta_floor) {
    if (m_max < 0) throw ConfigError("invertibility probe: m_max >= 0");
    InvertibilityVerdict v;
    const SectorSample s = sector_sample(a.index(), zeta_floor);

    // reciprocal along the real ray drives the moderate-bound fit
    std::vector<double> xi, mag;
    bool overflow = false;
    for (double mod : s.mods) {
        const Cplx av = a(Cplx(mod, 0.0));
        if (av == Cplx(0, 0)) {
            v.evidence = "zero of a on the sector (at zeta = " + std::to_string(mod) + ")";
            return v;
        }
        const Cplx w = Cplx(1, 0) / av;
        const double m = std::abs(w);
        if (!std::isfinite(m)) {
            overflow = true;
            continue;
        }
        xi.push_back(mod);
        mag.push_back(m);
    }
    if (overflow) {
        v.evidence = "1/a overflows on the real ray: growth beyond any moderate bound";
        return v;
    }
    v.fit = fit_loglog_tail(xi, mag, 8);
    if (v.fit.has_overflow || v.fit.all_zero) {
        v.evidence = "reciprocal magnitudes unusable for a moderate fit";
        return v;
    }
    const int needed = std::max(0, static_cast<int>(std::ceil(-v.fit.line.slope - 0.05)));
    if (needed > m_max) {
        v.evidence = "moderate bound needs m = " + std::to_string(needed) + " > m_max";
        return v;
    }

    // sup of |zeta|^m |1/a| over the full sector sample, with stability
    auto sup_at = [&](const SectorSample& smp) {
        double best = 0.0;
        for (const Cplx& zeta : smp.zetas) {
            const Cplx av = a(zeta);
            if (av == Cplx(0, 0)) return kInf;
            const double m = std::abs(Cplx(1, 0) / av);
            if (!std::isfinite(m)) return kInf;
            best = std::max(best, std::pow(std::abs(zeta), needed) * m);
        }
        return best;
    };
    const double coarse = sup_at(s);
    const double fine = sup_at(refine(s));
    if (!std::isfinite(fine)) {
        v.evidence = "1/a unbounded on refined sector samples";
        return v;
    }
    v.invertible_so_far = true;
    v.m = needed;
    v.bound = fine;
    v.stable = std::abs(fine - coarse) < 0.01 * std::max(fine, 1e-300);
    return v;
}

} // namespace gfa
