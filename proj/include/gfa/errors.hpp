#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace gfa {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid configuration, malformed input, or violated precondition that
/// validation could have caught before running any numerics.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Evaluation hit a pole, a branch cut, or produced a non-finite value.
class EvalError : public Error {
public:
    EvalError(const std::string& what, std::complex<double> where)
        : Error(what), where_(where) {}
    explicit EvalError(const std::string& what) : Error(what) {}
    std::complex<double> where() const { return where_; }

private:
    std::complex<double> where_{0.0, 0.0};
};

/// Numeric procedure failed: quadrature did not converge, a fit is
/// ill-conditioned, a sampling budget is unattainable.
class NumericError : public Error {
public:
    using Error::Error;
};

} // namespace gfa
