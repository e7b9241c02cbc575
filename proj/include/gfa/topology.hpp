#pragma once

#include "gfa/norms.hpp"

namespace gfa {

/// Sharp-topology 0-neighborhood V(K, p, q): xi^q decay of derivatives up to
/// order p on the compact K.
struct SharpNeighborhood {
    CompactSpec K;
    int p = 0;
    int q = 0;
};

struct SharpOrderFit {
    int order = 0;
    LogLogFit fit;
    bool pass = false;
};

struct SharpVerdict {
    bool member = false;
    double C = 0.0;   // fitted constant
    double eta = 0.0; // largest xi of the verified window
    std::vector<SharpOrderFit> per_order;
};

SharpVerdict sharp_membership(const Representative& f, const SharpNeighborhood& V,
                              std::span<const double> xi,
                              const EvalOptions& opts = {});

/// Increasing sequence of spaces H_{n_p, phi_p} satisfying the product,
/// derivative, and compactness conditions: n_{p+1} = 2 n_p + 1 and
/// phi_{p+1} dominates phi_p^2, the derivative weight, and the
/// psi-construction growth.
struct SpaceChain {
    std::vector<SpaceIndex> spaces;
};

SpaceChain build_chain(const SpaceIndex& base, int steps,
                       std::span<const double> eps_schedule, int exhaustion_rmax = 8);

/// Machine-checkable certificates for the chain conditions on a corpus.
struct ChainCertificates {
    struct ProductCheck {
        int step;
        size_t i, j;
        double lhs, rhs; // est_{p+1}(fi*fj) and est_p(fi)*est_p(fj)
        bool pass;
    };
    struct DerivativeCheck {
        int step;
        size_t i;
        double estimate;
        bool stable;
    };
    struct StabilityCheck {
        int step;
        size_t i;
        double estimate;
        bool stable;
    };
    std::vector<ProductCheck> products;
    std::vector<DerivativeCheck> derivatives;
    std::vector<StabilityCheck> norms;
    size_t applicable_elements = 0;
    bool all_pass = false;
};

ChainCertificates certify_chain(const SpaceChain& chain,
                                std::span<const Representative> corpus, long budget,
                                double zeta_floor, const EvalOptions& opts = {});

/// Smallest chain index p where all of fs have finite, refinement-stable
/// norm estimates; none-verdict is a value.
struct BoundedVerdict {
    bool found = false;
    int p = -1;
    double bound = 0.0;
    std::vector<double> estimates; // per element at the found index
};

BoundedVerdict bounded_in(const SpaceChain& chain, std::span<const Representative> fs,
                          long budget, double zeta_floor,
                          const EvalOptions& opts = {});

/// Certificate of the compactness construction: the nu_r table built over
/// the exhaustion, the eps -> q0(eps) schedule, and the grid-verified
/// final inequality.
struct PsiCertificate {
    SpaceIndex source;
    WeightFunction psi = WeightFunction::constant(1.0);
    std::vector<double> nu;      // final per-cell values (frozen discipline)
    std::vector<double> phi_sup; // sampled |phi|_{K_r} per cell
    std::vector<std::pair<double, int>> q0_table; // (eps, q0), q0 1-based
    bool verified = false;
    size_t grid_points = 0;
    size_t sequence_length = 0;
    std::string limit_note;
    std::vector<std::string> violations;
};

/// The constructive compactness proof on grids: premise (unit ball), nu_r
/// updates per eps step (freeze 1..m-1, raise r >= m to |phi|_{K_r}/eps_m),
/// q0 from the uniform-convergence stage, final inequality verified on the
/// V_{n+1} grid.
PsiCertificate construct_psi(const SpaceIndex& source,
                             std::span<const Representative> fs,
                             const Representative* f_limit,
                             std::span<const double> eps_schedule,
                             const SampleGrid& vnp1_grid,
                             const EvalOptions& opts = {});

/// Uniform boundedness on probe compacts, greedy Cauchy filtering, then the
/// psi-construction on the selected subsequence.
struct ExtractionReport {
    std::vector<double> premise_estimates;
    bool uniformly_bounded = false;
    std::vector<size_t> subsequence;
    PsiCertificate psi;
    bool certified = false;
    std::string note;
};

ExtractionReport verify_compact_extraction(std::span<const Representative> fs,
                                           const SpaceIndex& source,
                                           std::span<const double> eps_schedule,
                                           const SampleGrid& vnp1_grid,
                                           const EvalOptions& opts = {});

/// Finite Gamma_l1 hull: combinations sum lambda_i g_i with l1 weight mass
/// at most 1.
struct L1Hull {
    std::vector<Representative> generators;
};

L1Hull make_hull(std::vector<Representative> generators);
/// Pairwise products ordered by square enumeration of the double sequence.
L1Hull hull_product(const L1Hull& a, const L1Hull& b);
/// Sum |lambda| <= 1 (tolerance 1e-12); optionally reconstructs the
/// combination.
bool hull_member(const L1Hull& h, std::span<const Cplx> weights,
                 Representative* combination = nullptr, double tol = 1e-12);
/// Enumeration order of hull_product generators as (i, j) pairs.
std::vector<std::pair<size_t, size_t>> square_enumeration(size_t rows, size_t cols);

} // namespace gfa
