#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gfa/numeric.hpp"

namespace gfa {

enum class Op : unsigned char {
    constant,
    var_z,   // z_i, i = var_index
    var_zeta,
    add,
    sub,
    mul,
    div,
    pow_int, // a^exponent, integer exponent
    neg,
    fn_exp,
    fn_log,
    fn_atan,
    fn_sqrt
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable expression tree over z_1..z_k and zeta. All primitives are on
/// principal branches; cut and pole violations surface as EvalError.
struct Expr {
    Op op = Op::constant;
    Cplx value{0.0, 0.0};
    int var_index = 0;
    long exponent = 0;
    ExprPtr a, b;
};

// ---- builders (light constant folding) ----
ExprPtr constant(Cplx v);
ExprPtr variable_z(int index = 0);
ExprPtr variable_zeta();
ExprPtr add(ExprPtr a, ExprPtr b);
ExprPtr sub(ExprPtr a, ExprPtr b);
ExprPtr mul(ExprPtr a, ExprPtr b);
ExprPtr div(ExprPtr a, ExprPtr b);
ExprPtr powi(ExprPtr a, long e);
ExprPtr neg(ExprPtr a);
ExprPtr fn_exp(ExprPtr a);
ExprPtr fn_log(ExprPtr a);
ExprPtr fn_atan(ExprPtr a);
ExprPtr fn_sqrt(ExprPtr a);

bool is_constant(const ExprPtr& e, Cplx v);

/// Exact symbolic derivative with respect to z_axis.
ExprPtr differentiate(const ExprPtr& e, int axis);

/// Substitute constants for the z variables, leaving an expression in zeta.
ExprPtr substitute_z(const ExprPtr& e, std::span<const Cplx> z_values);

bool depends_on_z(const ExprPtr& e);
bool depends_on_zeta(const ExprPtr& e);
int max_z_index(const ExprPtr& e);

std::string to_string(const ExprPtr& e);

template <class R>
std::complex<R> eval(const Expr& e, std::span<const std::complex<R>> z,
                     std::complex<R> zeta) {
    using C = std::complex<R>;
    switch (e.op) {
        case Op::constant:
            return C(static_cast<R>(e.value.real()), static_cast<R>(e.value.imag()));
        case Op::var_z:
            if (e.var_index < 0 || e.var_index >= static_cast<int>(z.size()))
                throw EvalError("expression references z" +
                                std::to_string(e.var_index + 1) + " beyond dimension");
            return z[static_cast<size_t>(e.var_index)];
        case Op::var_zeta:
            return zeta;
        case Op::add:
            return eval(*e.a, z, zeta) + eval(*e.b, z, zeta);
        case Op::sub:
            return eval(*e.a, z, zeta) - eval(*e.b, z, zeta);
        case Op::mul:
            return eval(*e.a, z, zeta) * eval(*e.b, z, zeta);
        case Op::div:
            return guarded_div(eval(*e.a, z, zeta), eval(*e.b, z, zeta));
        case Op::pow_int:
            return pow_int(eval(*e.a, z, zeta), e.exponent);
        case Op::neg:
            return -eval(*e.a, z, zeta);
        case Op::fn_exp:
            return std::exp(eval(*e.a, z, zeta));
        case Op::fn_log:
            return guarded_log(eval(*e.a, z, zeta));
        case Op::fn_atan:
            return guarded_atan(eval(*e.a, z, zeta));
        case Op::fn_sqrt:
            return guarded_sqrt(eval(*e.a, z, zeta));
    }
    throw EvalError("corrupt expression node");
}

inline Cplx eval(const ExprPtr& e, std::span<const Cplx> z, Cplx zeta) {
    return eval<double>(*e, z, zeta);
}

} // namespace gfa
