#include "gfa/testfunc.hpp"

#include <cmath>
#include <sstream>

namespace gfa {

TestFunction TestFunction::gaussian(double center, double sigma, double halfwidth) {
    if (!(sigma > 0.0) || !(halfwidth > 0.0))
        throw ConfigError("test function: sigma and halfwidth must be positive");
    TestFunction t;
    t.kind_ = Kind::gaussian;
    t.center_ = center;
    t.sigma_ = sigma;
    t.halfwidth_ = halfwidth;
    t.lo_ = center - halfwidth;
    t.hi_ = center + halfwidth;
    std::ostringstream os;
    os << "gaussian(center=" << center << ",sigma=" << sigma << ",cut=" << halfwidth
       << ")";
    t.describe_ = os.str();
    return t;
}

TestFunction TestFunction::bump(double center, double halfwidth,
                                std::vector<double> poly) {
    if (!(halfwidth > 0.0)) throw ConfigError("test function: halfwidth must be positive");
    if (poly.empty()) poly = {1.0};
    TestFunction t;
    t.kind_ = Kind::bump;
    t.center_ = center;
    t.halfwidth_ = halfwidth;
    t.lo_ = center - halfwidth;
    t.hi_ = center + halfwidth;
    t.poly_ = std::move(poly);
    std::ostringstream os;
    os << "bump(center=" << center << ",halfwidth=" << halfwidth << ",poly_degree="
       << (t.poly_.size() - 1) << ")";
    t.describe_ = os.str();
    return t;
}

double TestFunction::operator()(double x) const {
    if (x <= lo_ || x >= hi_) return 0.0;
    const double u = x - center_;
    switch (kind_) {
        case Kind::gaussian: {
            const double s = u / sigma_;
            return std::exp(-s * s);
        }
        case Kind::bump: {
            double p = 0.0;
            for (size_t i = poly_.size(); i-- > 0;) p = p * u + poly_[i];
            const double c = std::cos(0.5 * kPi * u / halfwidth_);
            return p * c * c;
        }
    }
    return 0.0;
}

} // namespace gfa
