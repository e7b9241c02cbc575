#pragma once

#include <functional>

#include "gfa/fit.hpp"
#include "gfa/representative.hpp"
#include "gfa/sampling.hpp"

namespace gfa {

/// Element of the generalized-number ring: a holomorphic function of zeta
/// alone on the sector |arg zeta| < 1/n, 0 < |zeta| < 1/n.
class GeneralizedNumber {
public:
    GeneralizedNumber() = default;

    static GeneralizedNumber from_expression(ExprPtr zeta_expr, int n,
                                             std::string provenance = {});
    static GeneralizedNumber from_function(std::function<Cplx(Cplx)> fn, int n,
                                           std::string provenance = {});
    /// Wrap a pinned (k = 0) representative.
    static GeneralizedNumber from_representative(const Representative& f, int n);

    Cplx operator()(Cplx zeta) const;
    int index() const { return n_; }
    /// Closed-form body when available.
    const ExprPtr& expression() const { return expr_; }
    const std::string& provenance() const { return provenance_; }

    /// View as an x-independent representative (feeds the compactness and
    /// null-test machinery; Prop-6-style reuse).
    Representative as_representative(int dimension = 1) const;

private:
    std::function<Cplx(Cplx)> fn_;
    ExprPtr expr_; // may be null
    int n_ = 1;
    std::string provenance_;
};

GeneralizedNumber gn_add(const GeneralizedNumber& a, const GeneralizedNumber& b);
GeneralizedNumber gn_mul(const GeneralizedNumber& a, const GeneralizedNumber& b);
GeneralizedNumber gn_scale(Cplx c, const GeneralizedNumber& a);

/// Sampled sup of |zeta|^n |a(zeta)| over the sector, with a refinement
/// stability flag. +inf estimate marks overflow.
struct GnNorm {
    int n = 1;
    double estimate = 0.0;
    double coarse = 0.0;
    bool stable = false;
    size_t sample_count = 0;
    double zeta_floor = 0.0;
};

GnNorm gn_norm(const GeneralizedNumber& a, int n, double zeta_floor = 1e-6);

/// Moderate-bound probe for 1/a on sector samples.
struct InvertibilityVerdict {
    bool invertible_so_far = false;
    int m = -1;           // witnessing exponent when invertible
    double bound = 0.0;   // sup |zeta|^m |1/a| over the sector samples
    bool stable = false;
    std::string evidence; // noninvertibility evidence, when any
    LogLogFit fit;
};

InvertibilityVerdict gn_invertibility_probe(const GeneralizedNumber& a, int m_max,
                                            double zeta_floor = 1e-4);

} // namespace gfa
