#include "gfa/embedding.hpp"

#include <algorithm>
#include <cmath>

namespace gfa {

double MollifierSpec::normalization() const {
    if (s < 1) throw ConfigError("mollifier: s must be >= 1");
    // 1 / integral (1+x^2)^{-s} dx = Gamma(s) / (sqrt(pi) Gamma(s-1/2))
    return std::exp(std::lgamma(static_cast<double>(s)) -
                    std::lgamma(static_cast<double>(s) - 0.5)) /
           std::sqrt(kPi);
}

Cplx mollifier_value(Cplx z, Cplx zeta, const MollifierSpec& spec) {
    if (zeta == Cplx(0, 0)) throw EvalError("mollifier: zeta = 0");
    const Cplx q = z / zeta;
    const Cplx den = Cplx(1, 0) + q * q;
    if (den == Cplx(0, 0)) throw EvalError("mollifier kernel pole (z/zeta = +-i)", z);
    return (spec.normalization() / zeta) * pow_int(Cplx(1, 0) / den, spec.s);
}

namespace {

template <class R>
std::complex<R> total_mass_impl(std::complex<R> z, std::complex<R> zeta, R abs_tol) {
    using C = std::complex<R>;
    const R xr = z.real();
    auto integrand = [&](R th) -> C {
        const R t = std::tan(th);
        const R lam = xr + t;
        const R jac = R(1) + t * t; // sec^2
        const C u = C(lam) - z;
        const C den = zeta * zeta + u * u;
        if (den == C(0)) throw EvalError("mollifier mass: kernel pole on path");
        return (zeta / den) * jac / static_cast<R>(kPi);
    };
    QuadOptions<R> opts;
    opts.abs_tol = abs_tol;
    opts.rel_tol = R(1e-12);
    const double w = 5.0 * static_cast<double>(std::abs(zeta));
    const R bps[3] = {static_cast<R>(std::atan(-w)), R(0), static_cast<R>(std::atan(w))};
    return integrate_checked(integrand, static_cast<R>(-kPi / 2), static_cast<R>(kPi / 2),
                             opts, std::span<const R>(bps, 3));
}

} // namespace

Cplx mollifier_total_mass(Cplx z, Cplx zeta, double abs_tol, Precision prec) {
    if (zeta == Cplx(0, 0)) throw EvalError("mollifier mass: zeta = 0");
    if (prec == Precision::extended) {
        using C = std::complex<long double>;
        const C r = total_mass_impl<long double>(C(z.real(), z.imag()),
                                                 C(zeta.real(), zeta.imag()),
                                                 static_cast<long double>(abs_tol));
        return Cplx(static_cast<double>(r.real()), static_cast<double>(r.imag()));
    }
    return total_mass_impl<double>(z, zeta, abs_tol);
}

int embedding_index(const ShrinkingFamily& fam, double support_lo, double support_hi) {
    if (fam.dimension() != 1)
        throw ConfigError("embedding: v1 supports k = 1");
    const Interval guard{support_lo - 1.0, support_hi + 1.0};
    for (int n = 2; n <= 64; ++n) {
        bool clear = true;
        for (const Interval& o : fam.O_intervals(n)) {
            if (!intersect(o, guard).empty()) {
                clear = false;
                break;
            }
        }
        if (clear) return n;
    }
    throw ConfigError(
        "embedding: no sector index n <= 64 clears the support; "
        "family incompatible with this object");
}

Representative embed_delta(double x0, int order, const ShrinkingFamily& fam) {
    if (order < 0) throw ConfigError("embed_delta: order >= 0");
    std::vector<double> x0v{x0};
    if (!fam.ambient().contains(x0v))
        throw ConfigError("embed_delta: x0 must lie in Omega");
    const int n = embedding_index(fam, x0, x0);
    // (1/pi) zeta / (zeta^2 + (z - x0)^2)
    ExprPtr e = div(mul(constant({1.0 / kPi, 0}), variable_zeta()),
                    add(powi(variable_zeta(), 2),
                        powi(sub(variable_z(0), constant({x0, 0})), 2)));
    Representative rep =
        Representative::from_expression(
            e, 1, space_index(n, WeightFunction::constant(1.0), fam),
            "embed_delta(x0=" + std::to_string(x0) + ")")
            .with_hints({x0});
    for (int m = 0; m < order; ++m) rep = differentiate(rep, 0);
    return rep;
}

Representative embed_compact(std::vector<DistPiece> pieces, const ShrinkingFamily& fam) {
    if (pieces.empty()) throw ConfigError("embed_compact: no pieces");
    double lo = kInf, hi = -kInf;
    int max_order = 0;
    std::vector<double> hints;
    std::vector<ConvPiece> conv;
    for (DistPiece& p : pieces) {
        if (p.deriv_order < 0) throw ConfigError("embed_compact: deriv order >= 0");
        lo = std::min(lo, p.g.support_lo());
        hi = std::max(hi, p.g.support_hi());
        max_order = std::max(max_order, p.deriv_order);
        hints.push_back(p.g.support_lo());
        hints.push_back(p.g.support_hi());
        for (double kx : p.g.kinks()) hints.push_back(kx);
        conv.push_back(ConvPiece{std::move(p.g), p.deriv_order});
    }
    const int n = embedding_index(fam, lo, hi);
    return Representative::convolution(
        std::move(conv),
        space_index(n + max_order, WeightFunction::constant(1.0), fam),
        "embed_compact(support=[" + std::to_string(lo) + "," + std::to_string(hi) + "])",
        std::move(hints));
}

Representative embed_compact(RealFunc g, const ShrinkingFamily& fam) {
    std::vector<DistPiece> ps;
    ps.push_back(DistPiece{std::move(g), 0});
    return embed_compact(std::move(ps), fam);
}

Representative embed_constant_at_infinity(double c_minus, double c_plus,
                                          std::optional<RealFunc> middle,
                                          const ShrinkingFamily& fam, double split) {
    if (fam.dimension() != 1) throw ConfigError("embedding: v1 supports k = 1");
    const bool two_constants = c_minus != c_plus;
    if (two_constants) {
        if (fam.kind() != FamilyKind::at_infinity || fam.side() == InfinitySide::both)
            throw ConfigError(
                "distinct constants at +inf and -inf require a one-sided "
                "at_infinity family");
    }
    const double B = middle ? -middle->support_lo() : -split;
    const double A = middle ? middle->support_hi() : split;
    const int n = embedding_index(fam, -B, A);
    const auto claimed = space_index(n, WeightFunction::constant(1.0), fam);

    const double c_ref = (fam.kind() == FamilyKind::at_infinity &&
                          fam.side() == InfinitySide::left)
                             ? c_minus
                             : c_plus;
    const double c_other = (c_ref == c_plus) ? c_minus : c_plus;

    Representative rep = Representative::from_expression(
        constant({c_ref, 0}), 1, claimed, "const(" + std::to_string(c_ref) + ")");
    if (c_other != c_ref) {
        // the far tail carries the other constant
        Representative tail =
            (c_ref == c_plus)
                ? Representative::half_line_tail(-B, -1, claimed, "tail(left)")
                : Representative::half_line_tail(A, +1, claimed, "tail(right)");
        rep = add(rep, scale({c_other - c_ref, 0}, tail));
    }
    if (middle) {
        RealFunc shifted = middle->minus_constant(c_ref);
        rep = add(rep, embed_compact(shifted, fam).with_space(claimed));
    }
    return rep;
}

Representative embed_heaviside(const ShrinkingFamily& fam) {
    return embed_constant_at_infinity(0.0, 1.0, std::nullopt, fam, 0.0);
}

Representative embed_analytic(ExprPtr f, double radius_floor, const ShrinkingFamily& fam,
                              std::optional<SpaceIndex> claimed) {
    if (!(radius_floor > 0.0))
        throw ConfigError("embed_analytic: radius floor must be positive");
    if (depends_on_zeta(f))
        throw ConfigError("embed_analytic: the function must not depend on zeta");
    Representative rep = Representative::from_expression(
        f, std::max(1, max_z_index(f) + 1), std::move(claimed),
        "embed_analytic(" + to_string(f) + ")");
    // spot-check on the strip |y| < radius_floor / 2
    const Interval om = fam.dimension() == 1 ? fam.ambient().interval()
                                             : Interval{-2.0, 2.0};
    const Interval window = intersect(om, Interval{-8.0, 8.0});
    const auto xs = linspace(window.lo + 1e-3, window.hi - 1e-3, 9);
    for (double x : xs)
        for (double yf : {-0.45, 0.0, 0.45})
            (void)rep(Cplx(x, yf * radius_floor), Cplx(1e-3, 0.0));
    return rep;
}

Representative embed_polynomial_at_infinity(std::span<const double> coeffs,
                                            std::optional<RealFunc> remainder,
                                            const ShrinkingFamily& fam) {
    if (coeffs.empty()) throw ConfigError("polynomial embedding: no coefficients");
    if (coeffs.size() > 5)
        throw ConfigError("polynomial embedding: degree cap 4 exceeded");
    const int deg = static_cast<int>(coeffs.size()) - 1;
    ExprPtr p = constant({coeffs[0], 0});
    for (int j = 1; j <= deg; ++j)
        p = add(p, mul(constant({coeffs[static_cast<size_t>(j)], 0}),
                       powi(variable_z(0), j)));
    const double lo = remainder ? remainder->support_lo() : 0.0;
    const double hi = remainder ? remainder->support_hi() : 0.0;
    const int n = embedding_index(fam, lo, hi);
    const auto claimed =
        space_index(n, WeightFunction::polynomial(std::max(deg, 0)), fam);
    Representative rep = Representative::from_expression(
        p, 1, claimed, "poly_at_infinity(deg=" + std::to_string(deg) + ")");
    if (remainder)
        rep = add(rep, embed_compact(*remainder, fam).with_space(claimed));
    return rep;
}

EmbeddingBoundCertificate certify_embedding_bound(const Representative& emb,
                                                  double integral_abs,
                                                  const SampleGrid& grid,
                                                  const EvalOptions& base) {
    EmbeddingBoundCertificate cert;
    cert.integral_abs = integral_abs;
    KernelStats stats;
    EvalOptions opts = base;
    opts.stats = &stats;
    double sup = 0.0;
    std::vector<Cplx> z(1);
    for (const GridPoint& p : grid.points) {
        z[0] = Cplx(p.x[0], p.y[0]);
        const Cplx v = emb(std::span<const Cplx>(z), p.zeta, opts);
        sup = std::max(sup, std::abs(p.zeta) * std::abs(v));
    }
    cert.observed_sup = sup;
    cert.kernel_sup = stats.kernel_sup;
    cert.alpha_min = stats.alpha_min;
    cert.recorded_constant = (1.0 / kPi) * integral_abs * stats.kernel_sup;
    cert.pass = sup <= cert.recorded_constant + 1e-9;
    return cert;
}

} // namespace gfa
