#pragma once

#include "gfa/gnumber.hpp"
#include "gfa/laurent.hpp"
#include "gfa/testfunc.hpp"

namespace gfa {

struct LaurentProbe {
    std::vector<double> x;
    bool computed = false; // contour evaluated and residual under tolerance
    std::string issue;     // when not computed
    LaurentSeries series;  // valid when contour evaluation succeeded
    bool have_series = false;
    double sector_norm = 0.0; // stage-2 sector norm at this probe
};

struct NullWitness {
    enum class Kind { none, coefficient, norm } kind = Kind::none;
    std::vector<double> x;
    int j = 0;          // coefficient index (coefficient kind)
    Cplx a{0, 0};       // coefficient value
    double norm = 0.0;  // sector norm (norm kind); +inf marks overflow
};

/// Two-stage null test: Laurent coefficients at probe points in O_n, then a
/// sector-norm stage that catches elements vanishing to all polynomial
/// orders on the real axis. Verdict semantics: "zero on all probes to
/// tolerance".
struct NullTestReport {
    bool zero = false;
    NullWitness witness;
    std::vector<LaurentProbe> probes;
    double tol = 1e-9;
    int J = 16;
    double radius = 0.0;
};

NullTestReport null_test(const Representative& f, const ShrinkingFamily& fam, int n,
                         std::span<const std::vector<double>> probes, int J = 16,
                         double tol = 1e-9, double radius = 0.0,
                         const EvalOptions& opts = {});

/// Convenience: probes default to family witnesses of O_n; claimed space
/// supplies (family, n).
NullTestReport null_test(const Representative& f, int J = 16, double tol = 1e-9,
                         const EvalOptions& opts = {});

/// The point value of Prop. 1: the generalized number zeta -> f(x, zeta).
GeneralizedNumber pointvalue(const Representative& f, std::span<const double> x);
GeneralizedNumber pointvalue(const Representative& f, double x);

/// zeta -> Integral f(x, zeta) phi(x) dx by adaptive quadrature.
struct PairResult {
    GeneralizedNumber gn;
    bool support_in_On = false; // Prop-2 hypothesis; warn when false
};

PairResult pair(const Representative& f, const TestFunction& phi,
                const EvalOptions& opts = {});

/// Richardson extrapolation of the pairing along a real geometric xi-grid.
struct AssociationReport {
    std::vector<double> xi;
    std::vector<Cplx> values;
    RichardsonResult extrapolation;
    bool support_in_On = false;
};

AssociationReport associate(const Representative& f, const TestFunction& phi,
                            std::span<const double> xi_grid,
                            const EvalOptions& opts = {});

} // namespace gfa
