#pragma once

#include <string>

#include "gfa/fit.hpp"
#include "gfa/representative.hpp"
#include "gfa/sampling.hpp"

namespace gfa {

struct GridProvenance {
    int n = 0;
    long budget = 0;
    double zeta_floor = 0.0;
    std::uint64_t seed = 0;
    int refine_level = 0;
    size_t count = 0;
    std::string strategy;
};

GridProvenance provenance_of(const SampleGrid& g);

/// Sampled lower bound for the H_{n,phi} sup; never an upper-bound claim.
struct NormCertificate {
    SpaceIndex space;
    double estimate = 0.0; // on the refined grid
    double coarse = 0.0;   // on the base grid
    bool stable = false;   // refinement moved the estimate by < 1%
    GridProvenance grid;
    KernelStats kernel;
    std::string note;
};

/// max over the grid of |zeta|^n |f(z,zeta)| / phi(x); +inf when evaluation
/// overflows. Pole/branch failures carry the offending point.
double weighted_sup_on_grid(const Representative& f, const SpaceIndex& s,
                            const SampleGrid& grid, KernelStats* stats = nullptr,
                            const EvalOptions& base = {});

/// Estimate with one refinement step (the certificate's estimate is taken on
/// the refined grid, so it dominates the coarse value).
NormCertificate norm_estimate(const Representative& f, const SpaceIndex& s,
                              const SampleGrid& grid, const EvalOptions& base = {});

/// k = 1 compact K = [lo, hi] probed on an odd linspace.
struct CompactSpec {
    double lo = -1.0, hi = 1.0;
    int points = 41;
    std::vector<double> grid() const;
};

/// sup_{x in K} |f(x, xi)| per xi; +inf marks overflow.
std::vector<double> sup_profile(const Representative& f, const CompactSpec& K,
                                std::span<const double> xi,
                                const EvalOptions& base = {});

struct ModerateVerdict {
    bool pass = false;
    int N = -1;
    double constant = 0.0;
    LogLogFit fit;
    bool overflow = false;
    bool zero = false;
};

/// Smallest N <= N_max with sup_K |f(x, xi)| xi^N bounded, via the log-log
/// slope of the profile tail. Only the order-0 case is tested.
ModerateVerdict moderateness_check(const Representative& f, const CompactSpec& K,
                                   std::span<const double> xi, int N_max,
                                   const EvalOptions& base = {});

struct NegligibleVerdict {
    bool negligible = false;
    int fail_q = -1; // first failing q; -1 when none
    double constant = 0.0;
    LogLogFit fit;
    bool zero = false;
};

/// Verifies sup_K |f(x, xi)| <= C xi^q for q = 0..q_max via slope/intercept.
NegligibleVerdict negligibility_check(const Representative& f, const CompactSpec& K,
                                      std::span<const double> xi, int q_max,
                                      const EvalOptions& base = {});

} // namespace gfa
