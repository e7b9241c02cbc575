#include "gfa/expr.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace gfa {

namespace {

ExprPtr node(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

bool const_val(const ExprPtr& e, Cplx* out) {
    if (e->op != Op::constant) return false;
    if (out) *out = e->value;
    return true;
}

} // namespace

ExprPtr constant(Cplx v) {
    Expr e;
    e.op = Op::constant;
    e.value = v;
    return node(std::move(e));
}

ExprPtr variable_z(int index) {
    Expr e;
    e.op = Op::var_z;
    e.var_index = index;
    return node(std::move(e));
}

ExprPtr variable_zeta() {
    Expr e;
    e.op = Op::var_zeta;
    return node(std::move(e));
}

bool is_constant(const ExprPtr& e, Cplx v) {
    Cplx c;
    return const_val(e, &c) && c == v;
}

ExprPtr add(ExprPtr a, ExprPtr b) {
    Cplx ca, cb;
    if (const_val(a, &ca) && const_val(b, &cb)) return constant(ca + cb);
    if (is_constant(a, {0, 0})) return b;
    if (is_constant(b, {0, 0})) return a;
    Expr e;
    e.op = Op::add;
    e.a = std::move(a);
    e.b = std::move(b);
    return node(std::move(e));
}

ExprPtr sub(ExprPtr a, ExprPtr b) {
    Cplx ca, cb;
    if (const_val(a, &ca) && const_val(b, &cb)) return constant(ca - cb);
    if (is_constant(b, {0, 0})) return a;
    if (is_constant(a, {0, 0})) return neg(std::move(b));
    Expr e;
    e.op = Op::sub;
    e.a = std::move(a);
    e.b = std::move(b);
    return node(std::move(e));
}

ExprPtr mul(ExprPtr a, ExprPtr b) {
    Cplx ca, cb;
    if (const_val(a, &ca) && const_val(b, &cb)) return constant(ca * cb);
    if (is_constant(a, {0, 0}) || is_constant(b, {0, 0})) return constant({0, 0});
    if (is_constant(a, {1, 0})) return b;
    if (is_constant(b, {1, 0})) return a;
    Expr e;
    e.op = Op::mul;
    e.a = std::move(a);
    e.b = std::move(b);
    return node(std::move(e));
}

ExprPtr div(ExprPtr a, ExprPtr b) {
    if (is_constant(b, {1, 0})) return a;
    if (is_constant(a, {0, 0}) && !is_constant(b, {0, 0})) return constant({0, 0});
    Expr e;
    e.op = Op::div;
    e.a = std::move(a);
    e.b = std::move(b);
    return node(std::move(e));
}

ExprPtr powi(ExprPtr a, long exp) {
    if (exp == 0) return constant({1, 0});
    if (exp == 1) return a;
    Cplx ca;
    if (const_val(a, &ca) && !(ca == Cplx{0, 0} && exp < 0))
        return constant(pow_int(ca, exp));
    Expr e;
    e.op = Op::pow_int;
    e.exponent = exp;
    e.a = std::move(a);
    return node(std::move(e));
}

ExprPtr neg(ExprPtr a) {
    Cplx ca;
    if (const_val(a, &ca)) return constant(-ca);
    if (a->op == Op::neg) return a->a;
    Expr e;
    e.op = Op::neg;
    e.a = std::move(a);
    return node(std::move(e));
}

namespace {

ExprPtr unary(Op op, ExprPtr a) {
    Expr e;
    e.op = op;
    e.a = std::move(a);
    return node(std::move(e));
}

} // namespace

ExprPtr fn_exp(ExprPtr a) {
    if (is_constant(a, {0, 0})) return constant({1, 0});
    return unary(Op::fn_exp, std::move(a));
}
ExprPtr fn_log(ExprPtr a) {
    if (is_constant(a, {1, 0})) return constant({0, 0});
    return unary(Op::fn_log, std::move(a));
}
ExprPtr fn_atan(ExprPtr a) {
    if (is_constant(a, {0, 0})) return constant({0, 0});
    return unary(Op::fn_atan, std::move(a));
}
ExprPtr fn_sqrt(ExprPtr a) { return unary(Op::fn_sqrt, std::move(a)); }

ExprPtr differentiate(const ExprPtr& e, int axis) {
    switch (e->op) {
        case Op::constant:
        case Op::var_zeta:
            return constant({0, 0});
        case Op::var_z:
            return constant(e->var_index == axis ? Cplx{1, 0} : Cplx{0, 0});
        case Op::add:
            return add(differentiate(e->a, axis), differentiate(e->b, axis));
        case Op::sub:
            return sub(differentiate(e->a, axis), differentiate(e->b, axis));
        case Op::mul:
            return add(mul(differentiate(e->a, axis), e->b),
                       mul(e->a, differentiate(e->b, axis)));
        case Op::div:
            // (a/b)' = a'/b - a b'/b^2
            return sub(div(differentiate(e->a, axis), e->b),
                       div(mul(e->a, differentiate(e->b, axis)), powi(e->b, 2)));
        case Op::pow_int:
            return mul(mul(constant({static_cast<double>(e->exponent), 0}),
                           powi(e->a, e->exponent - 1)),
                       differentiate(e->a, axis));
        case Op::neg:
            return neg(differentiate(e->a, axis));
        case Op::fn_exp: {
            ExprPtr self = e;
            return mul(self, differentiate(e->a, axis));
        }
        case Op::fn_log:
            return div(differentiate(e->a, axis), e->a);
        case Op::fn_atan:
            return div(differentiate(e->a, axis),
                       add(constant({1, 0}), powi(e->a, 2)));
        case Op::fn_sqrt: {
            ExprPtr self = e;
            return div(differentiate(e->a, axis),
                       mul(constant({2, 0}), self));
        }
    }
    throw EvalError("corrupt expression node");
}

ExprPtr substitute_z(const ExprPtr& e, std::span<const Cplx> z_values) {
    switch (e->op) {
        case Op::constant:
        case Op::var_zeta:
            return e;
        case Op::var_z:
            if (e->var_index < 0 || e->var_index >= static_cast<int>(z_values.size()))
                throw EvalError("substitute_z: index beyond dimension");
            return constant(z_values[static_cast<size_t>(e->var_index)]);
        case Op::add:
            return add(substitute_z(e->a, z_values), substitute_z(e->b, z_values));
        case Op::sub:
            return sub(substitute_z(e->a, z_values), substitute_z(e->b, z_values));
        case Op::mul:
            return mul(substitute_z(e->a, z_values), substitute_z(e->b, z_values));
        case Op::div:
            return div(substitute_z(e->a, z_values), substitute_z(e->b, z_values));
        case Op::pow_int:
            return powi(substitute_z(e->a, z_values), e->exponent);
        case Op::neg:
            return neg(substitute_z(e->a, z_values));
        case Op::fn_exp:
            return fn_exp(substitute_z(e->a, z_values));
        case Op::fn_log:
            return fn_log(substitute_z(e->a, z_values));
        case Op::fn_atan:
            return fn_atan(substitute_z(e->a, z_values));
        case Op::fn_sqrt:
            return fn_sqrt(substitute_z(e->a, z_values));
    }
    throw EvalError("corrupt expression node");
}

bool depends_on_z(const ExprPtr& e) {
    if (e->op == Op::var_z) return true;
    if (e->a && depends_on_z(e->a)) return true;
    if (e->b && depends_on_z(e->b)) return true;
    return false;
}

bool depends_on_zeta(const ExprPtr& e) {
    if (e->op == Op::var_zeta) return true;
    if (e->a && depends_on_zeta(e->a)) return true;
    if (e->b && depends_on_zeta(e->b)) return true;
    return false;
}

int max_z_index(const ExprPtr& e) {
    int m = -1;
    if (e->op == Op::var_z) m = e->var_index;
    if (e->a) m = std::max(m, max_z_index(e->a));
    if (e->b) m = std::max(m, max_z_index(e->b));
    return m;
}

namespace {

std::string real_literal(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
}

void print(std::ostream& os, const Expr& e) {
    switch (e.op) {
        case Op::constant: {
            const Cplx v = e.value;
            if (v.imag() == 0.0) {
                if (v.real() < 0) os << "(" << real_literal(v.real()) << ")";
                else os << real_literal(v.real());
            } else if (v.real() == 0.0) {
                os << "(" << real_literal(v.imag()) << "*i)";
            } else {
                os << "(" << real_literal(v.real()) << (v.imag() < 0 ? "-" : "+")
                   << real_literal(std::abs(v.imag())) << "*i)";
            }
            return;
        }
        case Op::var_z:
            os << "z" << (e.var_index + 1);
            return;
        case Op::var_zeta:
            os << "zeta";
            return;
        case Op::add:
            os << "(";
            print(os, *e.a);
            os << "+";
            print(os, *e.b);
            os << ")";
            return;
        case Op::sub:
            os << "(";
            print(os, *e.a);
            os << "-";
            print(os, *e.b);
            os << ")";
            return;
        case Op::mul:
            os << "(";
            print(os, *e.a);
            os << "*";
            print(os, *e.b);
            os << ")";
            return;
        case Op::div:
            os << "(";
            print(os, *e.a);
            os << "/";
            print(os, *e.b);
            os << ")";
            return;
        case Op::pow_int:
            os << "(";
            print(os, *e.a);
            os << "^" << e.exponent << ")";
            return;
        case Op::neg:
            os << "(-";
            print(os, *e.a);
            os << ")";
            return;
        case Op::fn_exp: os << "exp("; print(os, *e.a); os << ")"; return;
        case Op::fn_log: os << "log("; print(os, *e.a); os << ")"; return;
        case Op::fn_atan: os << "atan("; print(os, *e.a); os << ")"; return;
        case Op::fn_sqrt: os << "sqrt("; print(os, *e.a); os << ")"; return;
    }
}

} // namespace

std::string to_string(const ExprPtr& e) {
    std::ostringstream os;
    print(os, *e);
    return os.str();
}

} // namespace gfa
