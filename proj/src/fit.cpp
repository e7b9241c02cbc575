#include "gfa/fit.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace gfa {

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw NumericError("fit_line: need >= 2 matched samples");
    const int n = static_cast<int>(x.size());
    Eigen::MatrixXd A(n, 2);
    Eigen::VectorXd b(n);
    for (int i = 0; i < n; ++i) {
        A(i, 0) = 1.0;
        A(i, 1) = x[static_cast<size_t>(i)];
        b(i) = y[static_cast<size_t>(i)];
    }
    const Eigen::Vector2d c = A.colPivHouseholderQr().solve(b);
    LineFit out;
    out.intercept = c(0);
    out.slope = c(1);
    out.n_used = n;
    out.rms_residual = std::sqrt((A * c - b).squaredNorm() / n);
    return out;
}

LogLogFit fit_loglog_tail(std::span<const double> xi, std::span<const double> s,
                          int min_points) {
    if (xi.size() != s.size())
        throw NumericError("fit_loglog_tail: mismatched inputs");
    LogLogFit out;
    out.n_total = static_cast<int>(xi.size());

    // collect usable (finite, positive) pairs
    std::vector<std::pair<double, double>> pts;
    bool any_nonzero = false;
    for (size_t i = 0; i < xi.size(); ++i) {
        if (!std::isfinite(s[i])) {
            out.has_overflow = true;
            continue;
        }
        if (s[i] > 0.0) {
            any_nonzero = true;
            pts.emplace_back(xi[i], s[i]);
        }
    }
    out.all_zero = !any_nonzero && !out.has_overflow;
    if (out.all_zero || out.has_overflow) return out;

    std::sort(pts.begin(), pts.end()); // ascending xi
    // small-xi half, at least min_points
    const size_t keep = std::max<size_t>(static_cast<size_t>(min_points),
                                         (pts.size() + 1) / 2);
    if (pts.size() < static_cast<size_t>(min_points))
        throw NumericError("slope fit ill-conditioned: fewer than " +
                           std::to_string(min_points) + " usable grid points");
    pts.resize(std::min(pts.size(), keep));

    std::vector<double> lx, ls;
    for (const auto& [a, b] : pts) {
        lx.push_back(std::log(a));
        ls.push_back(std::log(b));
    }
    out.line = fit_line(lx, ls);
    out.n_usable = static_cast<int>(pts.size());
    out.window_lo = pts.front().first;
    out.window_hi = pts.back().first;
    return out;
}

std::vector<double> geometric_grid(double from, double to, int per_decade) {
    if (!(from > to) || !(to > 0.0) || per_decade < 1)
        throw ConfigError("geometric_grid: need from > to > 0, per_decade >= 1");
    const double decades = std::log10(from / to);
    const int n = std::max(2, static_cast<int>(std::lround(decades * per_decade)) + 1);
    std::vector<double> up = logspace(to, from, n);
    std::reverse(up.begin(), up.end());
    return up;
}

RichardsonResult richardson_extrapolate(std::span<const double> xi,
                                        std::span<const Cplx> v,
                                        double confidence_tol) {
    if (xi.size() != v.size() || xi.size() < 10)
        throw ConfigError("richardson: need a geometric grid with >= 10 points");
    const size_t n = xi.size();
    for (size_t i = 0; i + 1 < n; ++i)
        if (!(xi[i] > xi[i + 1]) || !(xi[i + 1] > 0.0))
            throw ConfigError("richardson: grid must decrease to 0+");
    const double rho = xi[1] / xi[0];
    for (size_t i = 0; i + 1 < n; ++i)
        if (std::abs(xi[i + 1] / xi[i] - rho) > 1e-9 * rho)
            throw ConfigError("richardson: grid must be geometric");

    RichardsonResult out;

    // divergence check on the small-xi tail
    std::vector<double> mags;
    for (const Cplx& c : v) mags.push_back(std::abs(c));
    bool overflow = false;
    for (double m : mags)
        if (!std::isfinite(m)) overflow = true;
    if (!overflow) {
        LogLogFit lf;
        try {
            lf = fit_loglog_tail(xi, mags, 6);
        } catch (const NumericError&) {
            lf.all_zero = true; // too few nonzero values: treat as converged to 0
        }
        if (!lf.all_zero && lf.line.slope < -0.05) {
            out.verdict = RichardsonResult::Verdict::divergent;
            out.divergence_order = -lf.line.slope;
            out.limit = {0, 0};
            return out;
        }
    } else {
        out.verdict = RichardsonResult::Verdict::divergent;
        out.divergence_order = kInf;
        return out;
    }

    // 3-point windows toward xi -> 0
    const double lr = std::log(rho);
    for (size_t i = 0; i + 2 < n; ++i) {
        const Cplx d0 = v[i + 1] - v[i];
        const Cplx d1 = v[i + 2] - v[i + 1];
        if (std::abs(d0) == 0.0) {
            out.window_limits.push_back(v[i + 2]);
            out.window_orders.push_back(kInf);
            continue;
        }
        const double ratio = std::abs(d1) / std::abs(d0);
        if (!(ratio > 0.0) || !std::isfinite(ratio)) continue;
        const double p = std::log(ratio) / lr;
        const Cplx rp = std::pow(Cplx(rho, 0), Cplx(p, 0));
        const Cplx denom = rp - Cplx(1, 0);
        if (std::abs(denom) < 1e-14) continue;
        const Cplx L = v[i] - d0 / denom;
        out.window_limits.push_back(L);
        out.window_orders.push_back(p);
    }

    if (out.window_limits.empty()) {
        // flat data: the limit is the last value
        out.limit = v[n - 1];
        out.order = kInf;
        out.confidence = 0.0;
        return out;
    }

    const size_t w = out.window_limits.size();
    const size_t last = std::min<size_t>(3, w);
    Cplx mean{0, 0};
    for (size_t i = w - last; i < w; ++i) mean += out.window_limits[i];
    mean /= static_cast<double>(last);
    double spread = 0.0;
    for (size_t i = w - last; i < w; ++i)
        for (size_t j = i + 1; j < w; ++j)
            spread = std::max(spread, std::abs(out.window_limits[i] - out.window_limits[j]));
    out.limit = out.window_limits.back();
    out.confidence = spread / std::max(std::abs(mean), 1e-300);
    out.low_confidence = out.confidence > confidence_tol && spread > confidence_tol;

    double psum = 0.0;
    int pcnt = 0;
    for (size_t i = w - last; i < w; ++i)
        if (std::isfinite(out.window_orders[i])) {
            psum += out.window_orders[i];
            ++pcnt;
        }
    out.order = pcnt ? psum / pcnt : kInf;
    return out;
}

} // namespace gfa
