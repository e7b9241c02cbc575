#include "gfa/laurent.hpp"

#include <algorithm>
#include <cmath>

namespace gfa {

Cplx LaurentSeries::a(int j) const {
    if (j < -J || j > J) return {0, 0};
    return coeff[static_cast<size_t>(j + J)];
}

Cplx LaurentSeries::reconstruct(Cplx zeta) const {
    // Horner in zeta for j >= 0, direct powers of 1/zeta for j < 0
    Cplx pos{0, 0};
    for (int j = J; j >= 0; --j) pos = pos * zeta + a(j);
    Cplx negv{0, 0};
    const Cplx inv = Cplx(1, 0) / zeta;
    Cplx zp = inv;
    for (int j = -1; j >= -J; --j) {
        negv += a(j) * zp;
        zp *= inv;
    }
    return pos + negv;
}

std::pair<int, double> LaurentSeries::dominant() const {
    int best_j = 0;
    double best = -1.0;
    for (int j = -J; j <= J; ++j) {
        const double m = std::abs(a(j));
        if (m > best) {
            best = m;
            best_j = j;
        }
    }
    return {best_j, best};
}

namespace {

// contour trapezoid = DFT of the circle samples; templated so the extended
// mode keeps the r^{-j} amplification of rounding noise under control
template <class R>
void contour_coefficients(const Representative& f, std::span<const double> x,
                          double radius, int J, int M, const EvalOptions& opts,
                          std::vector<Cplx>* out) {
    using C = std::complex<R>;
    constexpr R pi = static_cast<R>(3.14159265358979323846264338327950288L);
    std::vector<C> z;
    z.reserve(x.size());
    for (double v : x) z.emplace_back(static_cast<R>(v), R(0));

    std::vector<C> fm(static_cast<size_t>(M));
    for (int m = 0; m < M; ++m) {
        const R th = R(2) * pi * static_cast<R>(m) / static_cast<R>(M);
        const C zeta = std::polar(static_cast<R>(radius), th);
        if constexpr (std::is_same_v<R, long double>)
            fm[static_cast<size_t>(m)] = f.eval_extended(std::span<const C>(z), zeta, opts);
        else
            fm[static_cast<size_t>(m)] = f(std::span<const C>(z), zeta, opts);
    }

    out->assign(static_cast<size_t>(2 * J + 1), Cplx{0, 0});
    for (int j = -J; j <= J; ++j) {
        C acc{0, 0};
        for (int m = 0; m < M; ++m) {
            const R th = R(2) * pi * static_cast<R>(m) / static_cast<R>(M);
            acc += fm[static_cast<size_t>(m)] * std::polar(R(1), -static_cast<R>(j) * th);
        }
        const C val = acc / static_cast<R>(M) / std::pow(static_cast<R>(radius), static_cast<R>(j));
        (*out)[static_cast<size_t>(j + J)] =
            Cplx(static_cast<double>(val.real()), static_cast<double>(val.imag()));
    }
}

} // namespace

LaurentSeries laurent(const Representative& f, const ShrinkingFamily& fam, int n,
                      std::span<const double> x, double radius, int J,
                      const EvalOptions& opts) {
    if (J < 0) throw ConfigError("laurent: J >= 0");
    if (!(radius > 0.0) || !(radius < 1.0 / n))
        throw ConfigError("laurent: radius must satisfy 0 < r < 1/n");
    if (!fam.in_O(n, x))
        throw ConfigError(
            "laurent: x must lie in O_n (the A-branch lacks the full circle)");

    LaurentSeries s;
    s.x.assign(x.begin(), x.end());
    s.radius = radius;
    s.J = J;
    s.M = std::max(256, 8 * J + 16);

    if (opts.precision == Precision::extended)
        contour_coefficients<long double>(f, x, radius, J, s.M, opts, &s.coeff);
    else
        contour_coefficients<double>(f, x, radius, J, s.M, opts, &s.coeff);

    // residual on the interleaved circle
    std::vector<Cplx> z;
    z.reserve(x.size());
    for (double v : x) z.emplace_back(v, 0.0);
    double res = 0.0;
    for (int m = 0; m < s.M; ++m) {
        const double th = 2.0 * kPi * (m + 0.5) / s.M;
        const Cplx zeta = std::polar(radius, th);
        const Cplx truth = f(std::span<const Cplx>(z), zeta, opts);
        res = std::max(res, std::abs(truth - s.reconstruct(zeta)));
    }
    s.residual = res;
    return s;
}

LaurentSeries laurent(const Representative& f, double x, double radius, int J,
                      const EvalOptions& opts) {
    if (!f.space())
        throw ConfigError("laurent: representative has no claimed space; "
                          "pass the family and n explicitly");
    const double xv[1] = {x};
    return laurent(f, f.space()->family, f.space()->n, std::span<const double>(xv, 1),
                   radius, J, opts);
}

} // namespace gfa
