#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "gfa/errors.hpp"

namespace gfa {

using Cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// log, sqrt and atan are taken on their principal branches; evaluation on a
/// cut is reported as an error rather than silently picking a side.
template <class R>
std::complex<R> guarded_log(std::complex<R> w) {
    if (w.imag() == R(0) && w.real() <= R(0))
        throw EvalError("log: argument on branch cut (Re <= 0, Im = 0)",
                        Cplx(static_cast<double>(w.real()), static_cast<double>(w.imag())));
    return std::log(w);
}

template <class R>
std::complex<R> guarded_sqrt(std::complex<R> w) {
    if (w.imag() == R(0) && w.real() < R(0))
        throw EvalError("sqrt: argument on branch cut (Re < 0, Im = 0)",
                        Cplx(static_cast<double>(w.real()), static_cast<double>(w.imag())));
    return std::sqrt(w);
}

template <class R>
std::complex<R> guarded_atan(std::complex<R> w) {
    // principal cut: {Re w = 0, |Im w| >= 1}
    if (w.real() == R(0) && std::abs(w.imag()) >= R(1))
        throw EvalError("atan: argument on branch cut (Re = 0, |Im| >= 1)",
                        Cplx(static_cast<double>(w.real()), static_cast<double>(w.imag())));
    return std::atan(w);
}

template <class R>
std::complex<R> guarded_div(std::complex<R> num, std::complex<R> den) {
    if (den == std::complex<R>(R(0), R(0)))
        throw EvalError("division by zero",
                        Cplx(static_cast<double>(num.real()), static_cast<double>(num.imag())));
    return num / den;
}

/// Integer power by repeated squaring; negative exponents guard the pole.
template <class R>
std::complex<R> pow_int(std::complex<R> base, long e) {
    if (e < 0) {
        if (base == std::complex<R>(R(0), R(0)))
            throw EvalError("pole: zero raised to negative power");
        return std::complex<R>(R(1)) / pow_int(base, -e);
    }
    std::complex<R> acc(R(1));
    std::complex<R> b = base;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

inline bool finite(Cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

/// n log-spaced values from a to b inclusive (a, b > 0).
std::vector<double> logspace(double a, double b, int n);
/// n linearly spaced values from a to b inclusive.
std::vector<double> linspace(double a, double b, int n);
/// Inserts midpoints between consecutive values: n -> 2n-1, keeps the old
/// points so downstream maxima are monotone under refinement.
std::vector<double> midpoint_refine(const std::vector<double>& v, bool log_scale);

/// FNV-1a, used to stamp reports with a stable config hash.
std::uint64_t fnv1a(const std::string& bytes);
std::string fnv1a_hex(const std::string& bytes);

} // namespace gfa
