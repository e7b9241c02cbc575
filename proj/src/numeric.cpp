#include "gfa/numeric.hpp"

#include <cstdio>

namespace gfa {

std::vector<double> logspace(double a, double b, int n) {
    if (!(a > 0.0) || !(b > 0.0) || b < a || n < 1)
        throw NumericError("logspace: need 0 < a <= b, n >= 1");
    std::vector<double> out;
    out.reserve(static_cast<size_t>(n));
    if (n == 1) {
        out.push_back(a);
        return out;
    }
    const double la = std::log(a), lb = std::log(b);
    for (int i = 0; i < n; ++i)
        out.push_back(std::exp(la + (lb - la) * static_cast<double>(i) / (n - 1)));
    out.front() = a;
    out.back() = b;
    return out;
}

std::vector<double> linspace(double a, double b, int n) {
    if (n < 1) throw NumericError("linspace: n >= 1");
    std::vector<double> out;
    out.reserve(static_cast<size_t>(n));
    if (n == 1) {
        out.push_back(0.5 * (a + b));
        return out;
    }
    for (int i = 0; i < n; ++i)
        out.push_back(a + (b - a) * static_cast<double>(i) / (n - 1));
    out.front() = a;
    out.back() = b;
    return out;
}

std::vector<double> midpoint_refine(const std::vector<double>& v, bool log_scale) {
    if (v.size() < 2) return v;
    std::vector<double> out;
    out.reserve(v.size() * 2 - 1);
    for (size_t i = 0; i + 1 < v.size(); ++i) {
        out.push_back(v[i]);
        if (log_scale)
            out.push_back(std::sqrt(v[i] * v[i + 1]));
        else
            out.push_back(0.5 * (v[i] + v[i + 1]));
    }
    out.push_back(v.back());
    return out;
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string fnv1a_hex(const std::string& bytes) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a(bytes)));
    return std::string(buf);
}

} // namespace gfa
