#pragma once

#include <optional>

#include "gfa/norms.hpp"
#include "gfa/representative.hpp"

namespace gfa {

/// rho(z) = const / (1+z^2)^s with const chosen so the total integral is 1.
struct MollifierSpec {
    int s = 1;
    double normalization() const; // Gamma(s) / (sqrt(pi) Gamma(s - 1/2))
};

/// rho_zeta(z) = (1/zeta) rho(z/zeta).
Cplx mollifier_value(Cplx z, Cplx zeta, const MollifierSpec& spec = {});

/// (1/pi) zeta^{-1} Integral dlambda / (1 + ((lambda-z)/zeta)^2) over the
/// real line; equals 1 wherever the embedding applies.
Cplx mollifier_total_mass(Cplx z, Cplx zeta, double abs_tol = 1e-12,
                          Precision prec = Precision::standard);

/// Smallest n >= 2 whose O_n avoids [support_lo - 1, support_hi + 1]
/// (so both holomorphy cases of the embedding apply on V_n).
int embedding_index(const ShrinkingFamily& fam, double support_lo, double support_hi);

/// j applied to a point mass at x0 (order = number of derivatives):
/// closed-form representative (1/pi) zeta / (zeta^2 + (z-x0)^2) and its
/// symbolic z-derivatives.
Representative embed_delta(double x0, int order, const ShrinkingFamily& fam);

/// One derivative piece of a compactly supported distribution.
struct DistPiece {
    RealFunc g;
    int deriv_order = 0;
};

/// j on sums of derivatives of continuous compactly supported pieces;
/// quadrature-defined body, derivatives moved onto the kernel.
Representative embed_compact(std::vector<DistPiece> pieces, const ShrinkingFamily& fam);
Representative embed_compact(RealFunc g, const ShrinkingFamily& fam);

/// Distributions constant at infinity; c_minus != c_plus requires a
/// one-sided at_infinity family. `middle` holds the function values on its
/// support; `split` places the tails when no middle part is given.
Representative embed_constant_at_infinity(double c_minus, double c_plus,
                                          std::optional<RealFunc> middle,
                                          const ShrinkingFamily& fam,
                                          double split = 0.0);

/// Heaviside step at 0: c_minus = 0, c_plus = 1.
Representative embed_heaviside(const ShrinkingFamily& fam);

/// Analytic functions embed as zeta-independent representatives (faithful
/// subalgebra); spot-checks evaluation on the strip |y| < radius_floor/2.
Representative embed_analytic(ExprPtr f, double radius_floor,
                              const ShrinkingFamily& fam,
                              std::optional<SpaceIndex> claimed = std::nullopt);

/// Polynomials at infinity: the polynomial part embeds directly (entire),
/// the compactly supported remainder goes through the quadrature embedding.
/// Degree cap 4.
Representative embed_polynomial_at_infinity(std::span<const double> coeffs,
                                            std::optional<RealFunc> remainder,
                                            const ShrinkingFamily& fam);

/// Recorded Eq-23-style constant for an embedded object:
/// (1/pi) * Integral|f| * (observed kernel sup). The sampled sup of
/// |zeta| |F| must stay below it.
struct EmbeddingBoundCertificate {
    double recorded_constant = 0.0;
    double observed_sup = 0.0;
    double integral_abs = 0.0;
    double kernel_sup = 0.0;
    double alpha_min = kInf;
    bool pass = false;
};

EmbeddingBoundCertificate certify_embedding_bound(const Representative& emb,
                                                  double integral_abs,
                                                  const SampleGrid& grid,
                                                  const EvalOptions& base = {});

} // namespace gfa
