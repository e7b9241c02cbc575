#include "gfa/classical.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gfa/quadrature.hpp"

namespace gfa {

RealFunc RealFunc::triangle(double center, double halfwidth, double height) {
    if (!(halfwidth > 0.0)) throw ConfigError("triangle: halfwidth must be positive");
    RealFunc f;
    f.lo_ = center - halfwidth;
    f.hi_ = center + halfwidth;
    f.kinks_ = {center};
    f.fn_ = [=](double x) {
        return height * std::max(0.0, 1.0 - std::abs(x - center) / halfwidth);
    };
    std::ostringstream os;
    os << "triangle(center=" << center << ",halfwidth=" << halfwidth
       << ",height=" << height << ")";
    f.describe_ = os.str();
    return f;
}

RealFunc RealFunc::gaussian(double center, double sigma, double amplitude,
                            double cut_halfwidth) {
    if (!(sigma > 0.0) || !(cut_halfwidth > 0.0))
        throw ConfigError("gaussian: sigma and cut must be positive");
    RealFunc f;
    f.lo_ = center - cut_halfwidth;
    f.hi_ = center + cut_halfwidth;
    f.fn_ = [=](double x) {
        const double u = (x - center) / sigma;
        return amplitude * std::exp(-0.5 * u * u);
    };
    std::ostringstream os;
    os << "gaussian(center=" << center << ",sigma=" << sigma << ",amp=" << amplitude
       << ",cut=" << cut_halfwidth << ")";
    f.describe_ = os.str();
    return f;
}

RealFunc RealFunc::raised_cosine(double center, double halfwidth, double amplitude) {
    if (!(halfwidth > 0.0)) throw ConfigError("raised_cosine: halfwidth must be positive");
    RealFunc f;
    f.lo_ = center - halfwidth;
    f.hi_ = center + halfwidth;
    f.fn_ = [=](double x) {
        if (x <= center - halfwidth || x >= center + halfwidth) return 0.0;
        const double c = std::cos(0.5 * kPi * (x - center) / halfwidth);
        return amplitude * c * c;
    };
    std::ostringstream os;
    os << "raised_cosine(center=" << center << ",halfwidth=" << halfwidth
       << ",amp=" << amplitude << ")";
    f.describe_ = os.str();
    return f;
}

RealFunc RealFunc::table(std::vector<double> xs, std::vector<double> ys) {
    if (xs.size() < 2 || xs.size() != ys.size())
        throw ConfigError("table: need >= 2 samples with matching columns");
    for (size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1]))
            throw ConfigError("table: sample abscissae must be strictly increasing");
    RealFunc f;
    f.lo_ = xs.front();
    f.hi_ = xs.back();
    f.kinks_.assign(xs.begin() + 1, xs.end() - 1);
    auto xs_p = std::make_shared<std::vector<double>>(std::move(xs));
    auto ys_p = std::make_shared<std::vector<double>>(std::move(ys));
    f.fn_ = [xs_p, ys_p](double x) {
        const auto& X = *xs_p;
        const auto& Y = *ys_p;
        if (x <= X.front() || x >= X.back()) {
            if (x == X.front()) return Y.front();
            if (x == X.back()) return Y.back();
            return 0.0;
        }
        const auto it = std::upper_bound(X.begin(), X.end(), x);
        const size_t j = static_cast<size_t>(it - X.begin());
        const double t = (x - X[j - 1]) / (X[j] - X[j - 1]);
        return Y[j - 1] + t * (Y[j] - Y[j - 1]);
    };
    f.describe_ = "table(" + std::to_string(xs_p->size()) + " samples)";
    return f;
}

RealFunc RealFunc::expression(ExprPtr e, double a, double b) {
    if (!(b > a)) throw ConfigError("expression support: need a < b");
    if (depends_on_zeta(e))
        throw ConfigError("classical data must not depend on zeta");
    RealFunc f;
    f.lo_ = a;
    f.hi_ = b;
    f.fn_ = [e](double x) {
        const Cplx z[1] = {Cplx(x, 0.0)};
        const Cplx v = eval(e, z, Cplx(1.0, 0.0));
        return v.real();
    };
    f.describe_ = "expr(" + to_string(e) + ") on [" + std::to_string(a) + "," +
                  std::to_string(b) + "]";
    return f;
}

RealFunc RealFunc::boxcar(double c, double a, double b) {
    if (!(b > a)) throw ConfigError("boxcar: need a < b");
    RealFunc f;
    f.lo_ = a;
    f.hi_ = b;
    f.fn_ = [c](double) { return c; };
    std::ostringstream os;
    os << "boxcar(" << c << ")";
    f.describe_ = os.str();
    return f;
}

double RealFunc::operator()(double x) const {
    if (x < lo_ || x > hi_) return 0.0;
    return fn_(x);
}

double RealFunc::integral() const {
    QuadOptions<double> opts;
    opts.abs_tol = 1e-12;
    opts.rel_tol = 1e-11;
    auto r = integrate([this](double x) { return Cplx((*this)(x), 0.0); }, lo_, hi_,
                       opts, std::span<const double>(kinks_));
    return r.value.real();
}

double RealFunc::integral_abs() const {
    QuadOptions<double> opts;
    opts.abs_tol = 1e-12;
    opts.rel_tol = 1e-11;
    auto r = integrate([this](double x) { return Cplx(std::abs((*this)(x)), 0.0); },
                       lo_, hi_, opts, std::span<const double>(kinks_));
    return r.value.real();
}

RealFunc RealFunc::minus_constant(double c) const {
    RealFunc f = *this;
    if (c == 0.0) return f;
    auto base = fn_;
    f.fn_ = [base, c](double x) { return base(x) - c; };
    f.describe_ = describe_ + "-" + std::to_string(c);
    return f;
}

} // namespace gfa
