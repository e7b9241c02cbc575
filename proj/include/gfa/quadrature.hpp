#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <queue>
#include <span>
#include <vector>

#include "gfa/numeric.hpp"

namespace gfa {

template <class R>
struct QuadOptions {
    R abs_tol = R(1e-10);
    R rel_tol = R(1e-9);
    long max_evals = 1L << 20;
};

template <class R>
struct QuadResult {
    std::complex<R> value{};
    R error = R(0);
    long evals = 0;
    bool converged = false;
};

namespace gkdetail {

// Gauss 7 / Kronrod 15 abscissae and weights (QUADPACK dqk15).
inline constexpr long double kXgk[8] = {
    0.991455371120812639206854697526329L, 0.949107912342758524526189684047851L,
    0.864864423359769072789712788640926L, 0.741531185599394439863864773280788L,
    0.586087235467691130294144838258730L, 0.405845151377397166906606412076961L,
    0.207784955007898467600689403773245L, 0.000000000000000000000000000000000L};
inline constexpr long double kWgk[8] = {
    0.022935322010529224963732008058970L, 0.063092092629978553290700663189204L,
    0.104790010322250183839876322541518L, 0.140653259715525918745189590510238L,
    0.169004726639267902826583426598550L, 0.190350578064785409913256402421014L,
    0.204432940075298892414161999234649L, 0.209482141084727828012999174891714L};
inline constexpr long double kWg[4] = {
    0.129484966168869693270611432679082L, 0.279705391489276667901467771423780L,
    0.381830050505118944950369775488975L, 0.417959183673469387755102040816327L};

template <class R, class F>
void gk15(F& f, R a, R b, std::complex<R>* value, R* error) {
    using C = std::complex<R>;
    const R half = (b - a) / R(2);
    const R mid = (a + b) / R(2);
    C resk(0), resg(0);
    for (int i = 0; i < 8; ++i) {
        const R x = static_cast<R>(kXgk[i]) * half;
        const C fl = f(mid - x);
        const C s = (i == 7) ? fl : (fl + f(mid + x));
        resk += static_cast<R>(kWgk[i]) * s;
        if (i % 2 == 1) resg += static_cast<R>(kWg[i / 2]) * s;
    }
    *value = resk * half;
    const C diff = (resk - resg) * half;
    *error = std::abs(diff);
}

template <class R>
struct Segment {
    R a, b;
    std::complex<R> value;
    R error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

} // namespace gkdetail

/// Adaptive Gauss-Kronrod integration of a complex-valued function on [a, b].
/// `breakpoints` seed the initial subdivision (peak locations, kinks).
template <class R, class F>
QuadResult<R> integrate(F&& f, R a, R b, const QuadOptions<R>& opts = {},
                        std::span<const R> breakpoints = {}) {
    using gkdetail::Segment;
    QuadResult<R> res;
    if (!(b > a)) {
        if (b == a) {
            res.converged = true;
            return res;
        }
        auto r = integrate(f, b, a, opts, breakpoints);
        r.value = -r.value;
        return r;
    }

    std::vector<R> edges{a};
    for (R bp : breakpoints)
        if (bp > a && bp < b) edges.push_back(bp);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::priority_queue<Segment<R>> heap;
    std::complex<R> total(0);
    R total_err(0);
    long evals = 0;
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
        Segment<R> s{edges[i], edges[i + 1], {}, R(0)};
        gkdetail::gk15(f, s.a, s.b, &s.value, &s.error);
        evals += 15;
        total += s.value;
        total_err += s.error;
        heap.push(s);
    }

    auto tolerance = [&](const std::complex<R>& v) {
        return std::max(opts.abs_tol, opts.rel_tol * std::abs(v));
    };

    while (total_err > tolerance(total) && evals + 30 <= opts.max_evals) {
        Segment<R> worst = heap.top();
        heap.pop();
        const R mid = (worst.a + worst.b) / R(2);
        if (!(mid > worst.a && mid < worst.b)) {
            // interval exhausted at machine resolution
            heap.push(worst);
            break;
        }
        Segment<R> left{worst.a, mid, {}, R(0)}, right{mid, worst.b, {}, R(0)};
        gkdetail::gk15(f, left.a, left.b, &left.value, &left.error);
        gkdetail::gk15(f, right.a, right.b, &right.value, &right.error);
        evals += 30;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    res.value = total;
    res.error = total_err;
    res.evals = evals;
    res.converged = total_err <= tolerance(total);
    return res;
}

/// Like integrate(), but a non-converged result is an error.
template <class R, class F>
std::complex<R> integrate_checked(F&& f, R a, R b, const QuadOptions<R>& opts = {},
                                  std::span<const R> breakpoints = {}) {
    auto r = integrate(f, a, b, opts, breakpoints);
    if (!r.converged)
        throw NumericError("quadrature non-convergence (error " +
                           std::to_string(static_cast<double>(r.error)) + " after " +
                           std::to_string(r.evals) + " evaluations)");
    return r.value;
}

} // namespace gfa
