#include "gfa/weights.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gfa {

double PiecewiseNu::at_cell(int r) const {
    if (nu.empty()) return 1.0;
    const int idx = std::clamp(r, 1, static_cast<int>(nu.size()));
    return nu[static_cast<size_t>(idx - 1)];
}

WeightFunction WeightFunction::constant(double c) {
    if (!(c > 0.0)) throw ConfigError("weight: constant must be positive");
    WeightFunction w;
    w.c_ = c;
    return w;
}

WeightFunction WeightFunction::polynomial(int m, double c) {
    WeightFunction w = constant(c);
    if (m < 0) throw ConfigError("weight: polynomial exponent must be >= 0");
    w.poly_m_ = m;
    return w;
}

WeightFunction WeightFunction::boundary_blowup(int m, double c) {
    WeightFunction w = constant(c);
    if (m < 0) throw ConfigError("weight: blowup exponent must be >= 0");
    w.blow_m_ = m;
    return w;
}

WeightFunction WeightFunction::piecewise(PiecewiseNu nu) {
    WeightFunction w;
    if (nu.nu.empty()) throw ConfigError("weight: empty nu table");
    for (size_t i = 0; i < nu.nu.size(); ++i) {
        if (!(nu.nu[i] > 0.0)) throw ConfigError("weight: nu values must be positive");
        if (i > 0 && nu.nu[i] < nu.nu[i - 1])
            throw ConfigError("weight: nu values must be nondecreasing");
    }
    w.nu_ = std::move(nu);
    return w;
}

double WeightFunction::operator()(std::span<const double> x, const Ambient& omega) const {
    double v = c_;
    if (poly_m_ > 0) {
        double norm2 = 0.0;
        for (double xi : x) norm2 += xi * xi;
        v *= std::pow(1.0 + std::sqrt(norm2), poly_m_);
    }
    if (blow_m_ > 0) {
        const double d = omega.boundary_distance(x);
        const double clamped = std::min(std::isfinite(d) ? d : 1.0, 1.0);
        v *= std::pow(clamped, -blow_m_);
    }
    if (nu_) v *= nu_->at_cell(omega.exhaustion_cell(x));
    return v;
}

double WeightFunction::sup_on(std::span<const std::vector<double>> xs,
                              const Ambient& omega) const {
    double best = 0.0;
    for (const auto& x : xs) best = std::max(best, (*this)(x, omega));
    return best;
}

double WeightFunction::cell_sup_bound(int r) const {
    const int rc = std::max(1, r);
    double v = c_;
    if (poly_m_ > 0) v *= std::pow(1.0 + rc, poly_m_);
    if (blow_m_ > 0) v *= std::pow(static_cast<double>(rc), blow_m_);
    if (nu_) v *= nu_->at_cell(rc);
    return v;
}

WeightFunction WeightFunction::product(const WeightFunction& other) const {
    WeightFunction w;
    w.c_ = c_ * other.c_;
    w.poly_m_ = poly_m_ + other.poly_m_;
    w.blow_m_ = blow_m_ + other.blow_m_;
    if (poly_m_ > 1000000 || blow_m_ > 1000000)
        throw NumericError("weight: exponent overflow beyond the catalog");
    if (nu_ && other.nu_) {
        PiecewiseNu out;
        const size_t len = std::max(nu_->nu.size(), other.nu_->nu.size());
        for (size_t i = 0; i < len; ++i)
            out.nu.push_back(nu_->at_cell(static_cast<int>(i) + 1) *
                             other.nu_->at_cell(static_cast<int>(i) + 1));
        w.nu_ = std::move(out);
    } else if (nu_) {
        w.nu_ = nu_;
    } else if (other.nu_) {
        w.nu_ = other.nu_;
    }
    return w;
}

WeightFunction WeightFunction::join_max(const WeightFunction& other) const {
    WeightFunction w;
    w.c_ = std::max(c_, other.c_);
    w.poly_m_ = std::max(poly_m_, other.poly_m_);
    w.blow_m_ = std::max(blow_m_, other.blow_m_);
    if (nu_ && other.nu_) {
        PiecewiseNu out;
        const size_t len = std::max(nu_->nu.size(), other.nu_->nu.size());
        for (size_t i = 0; i < len; ++i)
            out.nu.push_back(std::max(nu_->at_cell(static_cast<int>(i) + 1),
                                      other.nu_->at_cell(static_cast<int>(i) + 1)));
        w.nu_ = std::move(out);
    } else if (nu_) {
        w.nu_ = nu_;
    } else if (other.nu_) {
        w.nu_ = other.nu_;
    }
    return w;
}

bool WeightFunction::is_constant_one() const {
    return c_ == 1.0 && poly_m_ == 0 && blow_m_ == 0 && !nu_;
}

std::string WeightFunction::describe() const {
    std::ostringstream os;
    bool lead = true;
    auto sep = [&] {
        if (!lead) os << "*";
        lead = false;
    };
    if (c_ != 1.0 || (poly_m_ == 0 && blow_m_ == 0 && !nu_)) {
        sep();
        os << c_;
    }
    if (poly_m_ > 0) {
        sep();
        os << "(1+|x|)^" << poly_m_;
    }
    if (blow_m_ > 0) {
        sep();
        os << "min(d(x,bd),1)^-" << blow_m_;
    }
    if (nu_) {
        sep();
        os << "nu[";
        for (size_t i = 0; i < nu_->nu.size(); ++i) os << (i ? "," : "") << nu_->nu[i];
        os << "]";
    }
    return os.str();
}

SpaceIndex space_index(int n, WeightFunction phi, ShrinkingFamily family) {
    if (n < 1) throw ConfigError("space index: n must be >= 1");
    return SpaceIndex{n, std::move(phi), std::move(family)};
}

std::string SpaceIndex::describe() const {
    return "H(" + std::to_string(n) + ", " + phi.describe() + ")";
}

WeightFunction derivative_weight(const WeightFunction& phi, int n) {
    return phi.product(WeightFunction::boundary_blowup(1, static_cast<double>(n + 1)));
}

} // namespace gfa
