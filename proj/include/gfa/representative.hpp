#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gfa/classical.hpp"
#include "gfa/expr.hpp"
#include "gfa/quadrature.hpp"
#include "gfa/weights.hpp"

namespace gfa {

enum class Precision { standard, extended };

/// Accumulated while evaluating quadrature-defined bodies: the observed
/// distance of (lambda - z)/zeta to +-i and the observed kernel sup, which
/// back the recorded embedding constant.
struct KernelStats {
    double alpha_min = kInf;
    double kernel_sup = 0.0;
    long kernel_evals = 0;

    void merge(const KernelStats& o);
};

struct EvalOptions {
    Precision precision = Precision::standard;
    QuadOptions<double> quad{};
    KernelStats* stats = nullptr;
};

/// One quadrature piece of an embedded object: the convolution of g with the
/// deriv_order-th z-derivative of the scaled Cauchy mollifier.
struct ConvPiece {
    RealFunc g;
    int deriv_order = 0;
};

struct RepNode; // opaque body; defined in representative.cpp

/// An element of the algebra: a holomorphic function of (z, zeta), evaluable
/// on the sector domains of its claimed space. Immutable value type.
class Representative {
public:
    Representative() = default;

    static Representative from_expression(ExprPtr e, int dimension = 1,
                                          std::optional<SpaceIndex> space = std::nullopt,
                                          std::string provenance = {});
    static Representative convolution(std::vector<ConvPiece> pieces,
                                      std::optional<SpaceIndex> space,
                                      std::string provenance,
                                      std::vector<double> peak_hints);
    /// Embedding of the indicator of a half line: dir < 0 embeds
    /// 1_{lambda <= edge}, dir > 0 embeds 1_{lambda >= edge}.
    static Representative half_line_tail(double edge, int dir,
                                         std::optional<SpaceIndex> space,
                                         std::string provenance);

    bool valid() const { return node_ != nullptr; }
    int dimension() const;
    const std::optional<SpaceIndex>& space() const;
    Representative with_space(std::optional<SpaceIndex> s) const;
    Representative with_hints(std::vector<double> hints) const;
    const std::string& provenance() const;
    /// Real locations near which evaluation or pairing integrands peak or
    /// lose smoothness; quadratures seed subdivisions with these.
    const std::vector<double>& peak_hints() const;

    /// The expression tree when the whole body is one (nullptr otherwise).
    const ExprPtr* expression_body() const;

    Cplx operator()(std::span<const Cplx> z, Cplx zeta, const EvalOptions& opts = {}) const;
    Cplx operator()(Cplx z, Cplx zeta, const EvalOptions& opts = {}) const;
    /// Extended-precision evaluation (long double throughout); the backbone
    /// of the oracle mode.
    std::complex<long double> eval_extended(std::span<const std::complex<long double>> z,
                                            std::complex<long double> zeta,
                                            const EvalOptions& opts = {}) const;
    /// Restriction to real arguments: y = 0, zeta = xi.
    Cplx at_real(std::span<const double> x, double xi, const EvalOptions& opts = {}) const;
    Cplx at_real(double x, double xi, const EvalOptions& opts = {}) const;

    friend Representative add(const Representative& f, const Representative& g);
    friend Representative scale(Cplx c, const Representative& f);
    friend Representative mul(const Representative& f, const Representative& g);
    friend Representative differentiate(const Representative& f, int axis);
    friend Representative pin_x(const Representative& f, std::span<const double> x);

    std::string describe() const;

private:
    explicit Representative(std::shared_ptr<const RepNode> n) : node_(std::move(n)) {}
    std::shared_ptr<const RepNode> node_;
};

Representative add(const Representative& f, const Representative& g);
Representative sub(const Representative& f, const Representative& g);
Representative scale(Cplx c, const Representative& f);
Representative mul(const Representative& f, const Representative& g);
Representative differentiate(const Representative& f, int axis = 0);
/// Partial application z := x (x real): the generalized-number body behind
/// point values.
Representative pin_x(const Representative& f, std::span<const double> x);

/// The map (x, xi) -> f(x, xi): restriction to real arguments.
class RealRestriction {
public:
    explicit RealRestriction(Representative f) : f_(std::move(f)) {}
    Cplx operator()(double x, double xi, const EvalOptions& opts = {}) const {
        return f_.at_real(x, xi, opts);
    }
    Cplx operator()(std::span<const double> x, double xi,
                    const EvalOptions& opts = {}) const {
        return f_.at_real(x, xi, opts);
    }
    const Representative& source() const { return f_; }

private:
    Representative f_;
};

inline RealRestriction restrict_real(const Representative& f) {
    return RealRestriction(f);
}

/// Scaled Cauchy kernel rho_zeta(u) = (1/pi) zeta / (zeta^2 + u^2) and its
/// u-derivatives; order <= 2 closed form, higher orders symbolic.
template <class R>
std::complex<R> mollifier_kernel(int order, std::complex<R> u, std::complex<R> zeta);
extern template std::complex<double> mollifier_kernel<double>(int, std::complex<double>,
                                                              std::complex<double>);
extern template std::complex<long double>
mollifier_kernel<long double>(int, std::complex<long double>, std::complex<long double>);

/// The symbolic kernel d^m/du^m rho_zeta(u) as an expression in (z1 := u, zeta).
ExprPtr mollifier_kernel_expr(int order);

/// Geometric ladder of quadrature subdivision points expanding away from a
/// peak at `center` of width `scale`, clipped to (lo, hi).
void append_peak_ladder(std::vector<double>* breakpoints, double center, double scale,
                        double lo, double hi);

} // namespace gfa
