#include "gfa/representative.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>
#include <variant>

namespace gfa {

void KernelStats::merge(const KernelStats& o) {
    alpha_min = std::min(alpha_min, o.alpha_min);
    kernel_sup = std::max(kernel_sup, o.kernel_sup);
    kernel_evals += o.kernel_evals;
}

namespace {

constexpr double kPoleAlpha = 1e-9;

// Eq-21-style safety: (lambda - z)/zeta must stay away from +-i.
template <class R>
void track_kernel(std::complex<R> u, std::complex<R> zeta, KernelStats* stats) {
    const std::complex<R> ratio = u / zeta;
    const double am = std::min(std::abs(ratio - std::complex<R>(0, 1)),
                               std::abs(ratio + std::complex<R>(0, 1)));
    if (am < kPoleAlpha)
        throw EvalError("mollifier kernel pole on the integration path",
                        Cplx(static_cast<double>(u.real()), static_cast<double>(u.imag())));
    if (stats) {
        stats->alpha_min = std::min(stats->alpha_min, am);
        const std::complex<R> den = std::complex<R>(1) + ratio * ratio;
        stats->kernel_sup = std::max(stats->kernel_sup, 1.0 / static_cast<double>(std::abs(den)));
        stats->kernel_evals += 1;
    }
}

} // namespace

template <class R>
std::complex<R> mollifier_kernel(int order, std::complex<R> u, std::complex<R> zeta) {
    using C = std::complex<R>;
    const C den = zeta * zeta + u * u;
    if (den == C(0))
        throw EvalError("mollifier kernel pole",
                        Cplx(static_cast<double>(u.real()), static_cast<double>(u.imag())));
    const R inv_pi = R(1) / static_cast<R>(kPi);
    switch (order) {
        case 0:
            return inv_pi * zeta / den;
        case 1:
            return C(-2) * inv_pi * zeta * u / (den * den);
        case 2:
            return C(2) * inv_pi * zeta * (C(3) * u * u - zeta * zeta) / (den * den * den);
        default: {
            const ExprPtr e = mollifier_kernel_expr(order);
            const C zv[1] = {u};
            return eval<R>(*e, std::span<const C>(zv, 1), zeta);
        }
    }
}

template std::complex<double> mollifier_kernel<double>(int, std::complex<double>,
                                                       std::complex<double>);
template std::complex<long double>
mollifier_kernel<long double>(int, std::complex<long double>, std::complex<long double>);

ExprPtr mollifier_kernel_expr(int order) {
    if (order < 0) throw ConfigError("kernel order must be >= 0");
    static std::mutex mu;
    static std::vector<ExprPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (cache.empty()) {
        // rho_zeta(u) with u := z1
        cache.push_back(div(mul(constant({1.0 / kPi, 0}), variable_zeta()),
                            add(powi(variable_zeta(), 2), powi(variable_z(0), 2))));
    }
    while (static_cast<int>(cache.size()) <= order)
        cache.push_back(differentiate(cache.back(), 0));
    return cache[static_cast<size_t>(order)];
}

// ---------------------------------------------------------------------------

struct RepNode {
    struct ExprBody {
        ExprPtr e;
    };
    struct ConvBody {
        std::vector<ConvPiece> pieces;
    };
    struct TailBody {
        double edge;
        int dir; // -1: 1_{lambda <= edge}, +1: 1_{lambda >= edge}
    };
    struct SumBody {
        std::vector<std::pair<Cplx, std::shared_ptr<const RepNode>>> terms;
    };
    struct ProductBody {
        std::shared_ptr<const RepNode> a, b;
    };
    struct PinnedBody {
        std::shared_ptr<const RepNode> inner;
        std::vector<Cplx> z;
    };

    std::variant<ExprBody, ConvBody, TailBody, SumBody, ProductBody, PinnedBody> body;
    int k = 1;
    std::optional<SpaceIndex> space;
    std::string provenance;
    std::vector<double> hints;
};

namespace {

using NodePtr = std::shared_ptr<const RepNode>;

NodePtr make_node(RepNode n) { return std::make_shared<const RepNode>(std::move(n)); }

} // namespace

// Geometric ladder of subdivision points expanding away from a peak of
// width `scale`; keeps every adaptive panel within a bounded dynamic range
// so the error estimator cannot be blinded by an edge spike.
void append_peak_ladder(std::vector<double>* bps, double center, double scale,
                        double lo, double hi) {
    if (!(scale > 0.0)) return;
    if (center + scale < lo || center - scale > hi) return;
    bps->push_back(center);
    double w = 5.0 * scale;
    for (int k = 0; k < 24 && w < 2.0 * (hi - lo); ++k, w *= 8.0) {
        if (center - w > lo) bps->push_back(center - w);
        if (center + w < hi) bps->push_back(center + w);
    }
}

namespace {

template <class R>
QuadOptions<R> cast_quad(const QuadOptions<double>& q) {
    QuadOptions<R> out;
    out.abs_tol = static_cast<R>(q.abs_tol);
    out.rel_tol = static_cast<R>(q.rel_tol);
    out.max_evals = q.max_evals;
    return out;
}

template <class R>
std::complex<R> eval_node(const RepNode& n, std::span<const std::complex<R>> z,
                          std::complex<R> zeta, const EvalOptions& opts);

template <class R>
std::complex<R> eval_conv_piece(const ConvPiece& p, std::complex<R> z0,
                                std::complex<R> zeta, const EvalOptions& opts) {
    using C = std::complex<R>;
    const double lo = p.g.support_lo(), hi = p.g.support_hi();
    std::vector<double> bpd;
    for (double kx : p.g.kinks()) bpd.push_back(kx);
    // the kernel peaks in a window of width ~|zeta| around Re z
    append_peak_ladder(&bpd, static_cast<double>(z0.real()),
                       static_cast<double>(std::abs(zeta)), lo, hi);
    std::vector<R> bps(bpd.begin(), bpd.end());
    auto integrand = [&](R lam) -> C {
        const C u = z0 - C(lam);
        track_kernel(u, zeta, opts.stats);
        const R gval = static_cast<R>(p.g(static_cast<double>(lam)));
        return gval * mollifier_kernel<R>(p.deriv_order, u, zeta);
    };
    return integrate_checked(integrand, static_cast<R>(lo), static_cast<R>(hi),
                             cast_quad<R>(opts.quad), std::span<const R>(bps));
}

template <class R>
std::complex<R> eval_tail(const RepNode::TailBody& t, std::complex<R> z0,
                          std::complex<R> zeta, const EvalOptions& opts) {
    using C = std::complex<R>;
    if (zeta == C(0)) throw EvalError("tail body: zeta = 0");
    if (std::abs(std::arg(zeta)) <= kPi / 4) {
        // principal branch is the analytic continuation of the convolution here
        const C w = (C(static_cast<R>(t.edge)) - z0) / zeta;
        const C at = guarded_atan(w);
        const C half(R(0.5));
        const C scl(R(1) / static_cast<R>(kPi));
        return t.dir < 0 ? half + scl * at : half - scl * at;
    }
    // compactified quadrature: lambda = edge + sign * s/(1-s), s in [0,1)
    const R sign = t.dir < 0 ? R(-1) : R(1);
    // once |arg zeta| reaches pi/2 with Re z inside the tail, the kernel pole
    // crosses the integration path and the integral stops agreeing with the
    // analytic continuation; such points lie outside every V_n
    if (static_cast<double>(sign) * (static_cast<double>(z0.real()) - t.edge) > 0.0 &&
        std::abs(std::arg(zeta)) >= kPi / 2)
        throw EvalError("tail body: evaluation point outside the validity sector",
                        Cplx(static_cast<double>(zeta.real()),
                             static_cast<double>(zeta.imag())));
    auto integrand = [&](R s) -> C {
        const R om = R(1) - s;
        const R lam = static_cast<R>(t.edge) + sign * (s / om);
        const C u = z0 - C(lam);
        track_kernel(u, zeta, opts.stats);
        return mollifier_kernel<R>(0, u, zeta) / (om * om);
    };
    std::vector<double> bpd;
    const double xr = static_cast<double>(z0.real());
    const double tt = static_cast<double>(sign) * (xr - t.edge);
    if (tt > 0.0) { // Re z lies inside the tail: seed the kernel peak
        const double sstar = tt / (1.0 + tt);
        const double ds =
            static_cast<double>(std::abs(zeta)) * (1.0 - sstar) * (1.0 - sstar);
        append_peak_ladder(&bpd, sstar, ds, 0.0, 1.0);
    }
    std::vector<R> bps(bpd.begin(), bpd.end());
    return integrate_checked(integrand, R(0), R(1), cast_quad<R>(opts.quad),
                             std::span<const R>(bps));
}

template <class R>
std::complex<R> eval_node(const RepNode& n, std::span<const std::complex<R>> z,
                          std::complex<R> zeta, const EvalOptions& opts) {
    using C = std::complex<R>;
    return std::visit(
        [&](const auto& body) -> C {
            using T = std::decay_t<decltype(body)>;
            if constexpr (std::is_same_v<T, RepNode::ExprBody>) {
                return eval<R>(*body.e, z, zeta);
            } else if constexpr (std::is_same_v<T, RepNode::ConvBody>) {
                if (z.empty()) throw EvalError("convolution body needs z");
                C acc(0);
                for (const ConvPiece& p : body.pieces)
                    acc += eval_conv_piece<R>(p, z[0], zeta, opts);
                return acc;
            } else if constexpr (std::is_same_v<T, RepNode::TailBody>) {
                if (z.empty()) throw EvalError("tail body needs z");
                return eval_tail<R>(body, z[0], zeta, opts);
            } else if constexpr (std::is_same_v<T, RepNode::SumBody>) {
                C acc(0);
                for (const auto& [c, child] : body.terms)
                    acc += C(static_cast<R>(c.real()), static_cast<R>(c.imag())) *
                           eval_node<R>(*child, z, zeta, opts);
                return acc;
            } else if constexpr (std::is_same_v<T, RepNode::ProductBody>) {
                return eval_node<R>(*body.a, z, zeta, opts) *
                       eval_node<R>(*body.b, z, zeta, opts);
            } else {
                static_assert(std::is_same_v<T, RepNode::PinnedBody>);
                std::vector<C> zv;
                zv.reserve(body.z.size());
                for (Cplx v : body.z)
                    zv.emplace_back(static_cast<R>(v.real()), static_cast<R>(v.imag()));
                return eval_node<R>(*body.inner, std::span<const C>(zv), zeta, opts);
            }
        },
        n.body);
}

std::vector<double> merge_hints(const std::vector<double>& a,
                                const std::vector<double>& b) {
    std::vector<double> out = a;
    out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<SpaceIndex> combined_space(const std::optional<SpaceIndex>& a,
                                         const std::optional<SpaceIndex>& b,
                                         bool product) {
    if (!a || !b) return std::nullopt;
    if (!same_family(a->family, b->family))
        throw ConfigError("cannot combine representatives claimed over different families");
    if (product) return space_index(a->n + b->n, a->phi.product(b->phi), a->family);
    return space_index(std::max(a->n, b->n), a->phi.join_max(b->phi), a->family);
}

NodePtr derivative_of_tail(const RepNode::TailBody& t, int k) {
    // d/dz of the half-line embedding collapses to +- rho_zeta(z - edge)
    ExprPtr rho = div(mul(constant({1.0 / kPi, 0}), variable_zeta()),
                      add(powi(variable_zeta(), 2),
                          powi(sub(variable_z(0), constant({t.edge, 0})), 2)));
    if (t.dir < 0) rho = neg(rho);
    RepNode out;
    out.body = RepNode::ExprBody{rho};
    out.k = k;
    out.hints = {t.edge};
    return make_node(std::move(out));
}

NodePtr body_derivative(const NodePtr& n, int axis) {
    return std::visit(
        [&](const auto& body) -> NodePtr {
            using T = std::decay_t<decltype(body)>;
            RepNode out;
            out.k = n->k;
            out.hints = n->hints;
            if constexpr (std::is_same_v<T, RepNode::ExprBody>) {
                out.body = RepNode::ExprBody{differentiate(body.e, axis)};
                return make_node(std::move(out));
            } else if constexpr (std::is_same_v<T, RepNode::ConvBody>) {
                if (axis != 0)
                    throw ConfigError("convolution bodies are k = 1; axis must be 0");
                RepNode::ConvBody nb;
                for (const ConvPiece& p : body.pieces)
                    nb.pieces.push_back(ConvPiece{p.g, p.deriv_order + 1});
                out.body = std::move(nb);
                return make_node(std::move(out));
            } else if constexpr (std::is_same_v<T, RepNode::TailBody>) {
                if (axis != 0)
                    throw ConfigError("tail bodies are k = 1; axis must be 0");
                return derivative_of_tail(body, n->k);
            } else if constexpr (std::is_same_v<T, RepNode::SumBody>) {
                RepNode::SumBody nb;
                for (const auto& [c, child] : body.terms)
                    nb.terms.emplace_back(c, body_derivative(child, axis));
                out.body = std::move(nb);
                return make_node(std::move(out));
            } else if constexpr (std::is_same_v<T, RepNode::ProductBody>) {
                RepNode left;
                left.k = n->k;
                left.body = RepNode::ProductBody{body_derivative(body.a, axis), body.b};
                RepNode right;
                right.k = n->k;
                right.body = RepNode::ProductBody{body.a, body_derivative(body.b, axis)};
                RepNode::SumBody nb;
                nb.terms.emplace_back(Cplx{1, 0}, make_node(std::move(left)));
                nb.terms.emplace_back(Cplx{1, 0}, make_node(std::move(right)));
                out.body = std::move(nb);
                return make_node(std::move(out));
            } else {
                static_assert(std::is_same_v<T, RepNode::PinnedBody>);
                throw ConfigError("cannot differentiate a pinned (zeta-only) body in z");
            }
        },
        n->body);
}

} // namespace

// ---------------------------------------------------------------------------

Representative Representative::from_expression(ExprPtr e, int dimension,
                                               std::optional<SpaceIndex> space,
                                               std::string provenance) {
    if (!e) throw ConfigError("null expression");
    if (dimension < 0) throw ConfigError("dimension must be >= 0");
    if (max_z_index(e) + 1 > dimension)
        throw ConfigError("expression uses z beyond the stated dimension");
    RepNode n;
    n.body = RepNode::ExprBody{std::move(e)};
    n.k = dimension;
    n.space = std::move(space);
    n.provenance = std::move(provenance);
    return Representative(make_node(std::move(n)));
}

Representative Representative::convolution(std::vector<ConvPiece> pieces,
                                           std::optional<SpaceIndex> space,
                                           std::string provenance,
                                           std::vector<double> peak_hints) {
    if (pieces.empty()) throw ConfigError("convolution body needs at least one piece");
    RepNode n;
    n.body = RepNode::ConvBody{std::move(pieces)};
    n.k = 1;
    n.space = std::move(space);
    n.provenance = std::move(provenance);
    n.hints = std::move(peak_hints);
    return Representative(make_node(std::move(n)));
}

Representative Representative::half_line_tail(double edge, int dir,
                                              std::optional<SpaceIndex> space,
                                              std::string provenance) {
    RepNode n;
    n.body = RepNode::TailBody{edge, dir < 0 ? -1 : 1};
    n.k = 1;
    n.space = std::move(space);
    n.provenance = std::move(provenance);
    n.hints = {edge};
    return Representative(make_node(std::move(n)));
}

int Representative::dimension() const { return node_ ? node_->k : 0; }

const std::optional<SpaceIndex>& Representative::space() const {
    static const std::optional<SpaceIndex> none;
    return node_ ? node_->space : none;
}

Representative Representative::with_space(std::optional<SpaceIndex> s) const {
    if (!node_) throw ConfigError("empty representative");
    RepNode n = *node_;
    n.space = std::move(s);
    return Representative(make_node(std::move(n)));
}

Representative Representative::with_hints(std::vector<double> hints) const {
    if (!node_) throw ConfigError("empty representative");
    RepNode n = *node_;
    n.hints = std::move(hints);
    return Representative(make_node(std::move(n)));
}

const std::string& Representative::provenance() const {
    static const std::string none;
    return node_ ? node_->provenance : none;
}

const std::vector<double>& Representative::peak_hints() const {
    static const std::vector<double> none;
    return node_ ? node_->hints : none;
}

const ExprPtr* Representative::expression_body() const {
    if (!node_) return nullptr;
    if (const auto* eb = std::get_if<RepNode::ExprBody>(&node_->body)) return &eb->e;
    return nullptr;
}

Cplx Representative::operator()(std::span<const Cplx> z, Cplx zeta,
                                const EvalOptions& opts) const {
    if (!node_) throw EvalError("empty representative");
    if (opts.precision == Precision::extended) {
        using C = std::complex<long double>;
        std::vector<C> zl;
        zl.reserve(z.size());
        for (Cplx v : z) zl.emplace_back(v.real(), v.imag());
        const C r = eval_node<long double>(*node_, std::span<const C>(zl),
                                           C(zeta.real(), zeta.imag()), opts);
        return Cplx(static_cast<double>(r.real()), static_cast<double>(r.imag()));
    }
    return eval_node<double>(*node_, z, zeta, opts);
}

Cplx Representative::operator()(Cplx z, Cplx zeta, const EvalOptions& opts) const {
    const Cplx zv[1] = {z};
    return (*this)(std::span<const Cplx>(zv, 1), zeta, opts);
}

std::complex<long double> Representative::eval_extended(
    std::span<const std::complex<long double>> z, std::complex<long double> zeta,
    const EvalOptions& opts) const {
    if (!node_) throw EvalError("empty representative");
    return eval_node<long double>(*node_, z, zeta, opts);
}

Cplx Representative::at_real(std::span<const double> x, double xi,
                             const EvalOptions& opts) const {
    std::vector<Cplx> z;
    z.reserve(x.size());
    for (double v : x) z.emplace_back(v, 0.0);
    return (*this)(std::span<const Cplx>(z), Cplx(xi, 0.0), opts);
}

Cplx Representative::at_real(double x, double xi, const EvalOptions& opts) const {
    const Cplx zv[1] = {Cplx(x, 0.0)};
    return (*this)(std::span<const Cplx>(zv, 1), Cplx(xi, 0.0), opts);
}

std::string Representative::describe() const {
    if (!node_) return "<empty>";
    std::ostringstream os;
    std::visit(
        [&](const auto& body) {
            using T = std::decay_t<decltype(body)>;
            if constexpr (std::is_same_v<T, RepNode::ExprBody>) {
                os << to_string(body.e);
            } else if constexpr (std::is_same_v<T, RepNode::ConvBody>) {
                os << "conv[";
                for (size_t i = 0; i < body.pieces.size(); ++i) {
                    if (i) os << " + ";
                    if (body.pieces[i].deriv_order)
                        os << "D^" << body.pieces[i].deriv_order << " ";
                    os << body.pieces[i].g.describe();
                }
                os << "]*rho_zeta";
            } else if constexpr (std::is_same_v<T, RepNode::TailBody>) {
                os << "embed(1_{lambda" << (body.dir < 0 ? "<=" : ">=") << body.edge
                   << "})";
            } else if constexpr (std::is_same_v<T, RepNode::SumBody>) {
                os << "sum(" << body.terms.size() << " terms)";
            } else if constexpr (std::is_same_v<T, RepNode::ProductBody>) {
                os << "product";
            } else {
                os << "pinned";
            }
        },
        node_->body);
    return os.str();
}

Representative add(const Representative& f, const Representative& g) {
    if (!f.node_ || !g.node_) throw ConfigError("add: empty representative");
    if (f.node_->k != g.node_->k) throw ConfigError("add: mismatched dimensions");
    RepNode n;
    n.k = f.node_->k;
    RepNode::SumBody sb;
    auto absorb = [&](const NodePtr& p, Cplx coeff) {
        if (const auto* s = std::get_if<RepNode::SumBody>(&p->body)) {
            for (const auto& [c, child] : s->terms)
                sb.terms.emplace_back(coeff * c, child);
        } else {
            sb.terms.emplace_back(coeff, p);
        }
    };
    absorb(f.node_, {1, 0});
    absorb(g.node_, {1, 0});
    n.body = std::move(sb);
    n.space = combined_space(f.node_->space, g.node_->space, /*product=*/false);
    n.hints = merge_hints(f.node_->hints, g.node_->hints);
    n.provenance = "(" + f.node_->provenance + " + " + g.node_->provenance + ")";
    return Representative(make_node(std::move(n)));
}

Representative sub(const Representative& f, const Representative& g) {
    return add(f, scale({-1, 0}, g));
}

Representative scale(Cplx c, const Representative& f) {
    if (!f.node_) throw ConfigError("scale: empty representative");
    RepNode n;
    n.k = f.node_->k;
    n.space = f.node_->space;
    n.hints = f.node_->hints;
    n.provenance = f.node_->provenance;
    if (const ExprPtr* e = f.expression_body()) {
        n.body = RepNode::ExprBody{mul(constant(c), *e)};
        return Representative(make_node(std::move(n)));
    }
    RepNode::SumBody sb;
    if (const auto* s = std::get_if<RepNode::SumBody>(&f.node_->body)) {
        for (const auto& [c0, child] : s->terms) sb.terms.emplace_back(c * c0, child);
    } else {
        sb.terms.emplace_back(c, f.node_);
    }
    n.body = std::move(sb);
    return Representative(make_node(std::move(n)));
}

Representative mul(const Representative& f, const Representative& g) {
    if (!f.node_ || !g.node_) throw ConfigError("mul: empty representative");
    if (f.node_->k != g.node_->k) throw ConfigError("mul: mismatched dimensions");
    RepNode n;
    n.k = f.node_->k;
    const ExprPtr* ef = f.expression_body();
    const ExprPtr* eg = g.expression_body();
    if (ef && eg) {
        n.body = RepNode::ExprBody{mul(*ef, *eg)};
    } else {
        n.body = RepNode::ProductBody{f.node_, g.node_};
    }
    n.space = combined_space(f.node_->space, g.node_->space, /*product=*/true);
    n.hints = merge_hints(f.node_->hints, g.node_->hints);
    n.provenance = "(" + f.node_->provenance + " * " + g.node_->provenance + ")";
    return Representative(make_node(std::move(n)));
}

Representative differentiate(const Representative& f, int axis) {
    if (!f.node_) throw ConfigError("differentiate: empty representative");
    if (axis < 0 || (f.node_->k > 0 && axis >= f.node_->k))
        throw ConfigError("differentiate: axis out of range");
    NodePtr body = body_derivative(f.node_, axis);
    RepNode n = *body;
    if (f.node_->space) {
        const SpaceIndex& s = *f.node_->space;
        n.space = space_index(s.n + 1, derivative_weight(s.phi, s.n), s.family);
    }
    n.provenance = "d/dz" + std::to_string(axis + 1) + "[" + f.node_->provenance + "]";
    n.hints = f.node_->hints;
    return Representative(make_node(std::move(n)));
}

Representative pin_x(const Representative& f, std::span<const double> x) {
    if (!f.node_) throw ConfigError("pin_x: empty representative");
    if (static_cast<int>(x.size()) != f.node_->k)
        throw ConfigError("pin_x: dimension mismatch");
    RepNode n;
    n.k = 0;
    n.space = f.node_->space;
    n.provenance = f.node_->provenance + " at fixed x";
    if (const ExprPtr* e = f.expression_body()) {
        std::vector<Cplx> zv;
        for (double v : x) zv.emplace_back(v, 0.0);
        n.body = RepNode::ExprBody{substitute_z(*e, zv)};
        return Representative(make_node(std::move(n)));
    }
    RepNode::PinnedBody pb;
    pb.inner = f.node_;
    for (double v : x) pb.z.emplace_back(v, 0.0);
    n.body = std::move(pb);
    return Representative(make_node(std::move(n)));
}

} // namespace gfa
