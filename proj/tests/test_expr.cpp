#include <doctest.h>

#include <random>

#include "gfa/parser.hpp"
#include "gfa/representative.hpp"

using namespace gfa;

TEST_SUITE_BEGIN("expressions");

namespace {

Cplx ev(const std::string& src, Cplx z, Cplx zeta, int k = 1) {
    const ExprPtr e = parse_expression(src, k);
    const Cplx zv[1] = {z};
    return eval(e, std::span<const Cplx>(zv, 1), zeta);
}

} // namespace

TEST_CASE("parse and evaluate") {
    CHECK(ev("zeta", {0, 0}, {0.5, 0}) == Cplx(0.5, 0));
    CHECK(ev("2*zeta", {0, 0}, {0.1, 0}).real() == doctest::Approx(0.2).epsilon(1e-14));

    // (1/pi) zeta / (zeta^2 + z^2) at (0, 0.1) -> 10/pi, cross-checked at
    // extended precision
    const ExprPtr e = parse_expression("(1/pi)*zeta/(zeta^2+z^2)", 1);
    const Cplx zv[1] = {Cplx(0, 0)};
    const Cplx vd = eval(e, std::span<const Cplx>(zv, 1), Cplx(0.1, 0));
    using CL = std::complex<long double>;
    const CL zl[1] = {CL(0, 0)};
    const CL vl = eval<long double>(*e, std::span<const CL>(zl, 1), CL(0.1L, 0));
    CHECK(std::abs(vd - Cplx(static_cast<double>(vl.real()),
                             static_cast<double>(vl.imag()))) < 1e-14);
    CHECK(vd.real() == doctest::Approx(10.0 / kPi).epsilon(1e-14));

    // exp(-1/zeta^2) at real 0.1 -> exp(-100)
    CHECK(ev("exp(-1/zeta^2)", {0, 0}, {0.1, 0}).real() ==
          doctest::Approx(std::exp(-100.0)).epsilon(1e-12));

    CHECK(ev("pi", {0, 0}, {1, 0}).real() == doctest::Approx(kPi));
    CHECK(ev("i*i", {0, 0}, {1, 0}).real() == doctest::Approx(-1.0));
    CHECK(ev("z^-2", {2, 0}, {1, 0}).real() == doctest::Approx(0.25));
    CHECK(ev("zeta^(-1)", {0, 0}, {0.25, 0}).real() == doctest::Approx(4.0));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_expression("2 +* z", 1), ParseError);
    CHECK_THROWS_AS(parse_expression("z2", 1), ParseError);    // beyond dimension
    CHECK_THROWS_AS(parse_expression("foo(z)", 1), ParseError);
    CHECK_THROWS_AS(parse_expression("zeta^z", 1), ParseError); // integer exponent only
    CHECK_THROWS_AS(parse_expression("(z", 1), ParseError);
    try {
        parse_expression("z + #", 1);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
    CHECK_NOTHROW(parse_expression("z1+z2*zeta", 2));
}

TEST_CASE("principal branches report cut violations") {
    CHECK_THROWS_AS(ev("log(z)", {-1.0, 0}, {1, 0}), EvalError);
    CHECK_THROWS_AS(ev("sqrt(z)", {-4.0, 0}, {1, 0}), EvalError);
    CHECK_THROWS_AS(ev("atan(z)", {0, 2.0}, {1, 0}), EvalError);
    CHECK_THROWS_AS(ev("1/z", {0, 0}, {1, 0}), EvalError);
    CHECK_NOTHROW(ev("log(z)", {-1.0, 0.01}, {1, 0})); // just off the cut
    CHECK_NOTHROW(ev("atan(z)", {0.01, 2.0}, {1, 0}));
}

TEST_CASE("symbolic derivatives") {
    // d/dz (zeta z^2) = 2 zeta z; at (1, 0.1) -> 0.2
    const ExprPtr e = parse_expression("zeta*z^2", 1);
    const ExprPtr de = differentiate(e, 0);
    const Cplx zv[1] = {Cplx(1, 0)};
    CHECK(eval(de, std::span<const Cplx>(zv, 1), Cplx(0.1, 0)).real() ==
          doctest::Approx(0.2).epsilon(1e-14));

    // derivative of the delta embedding vanishes at z = 0 (odd kernel)
    const ExprPtr poisson = parse_expression("(1/pi)*zeta/(zeta^2+z^2)", 1);
    const ExprPtr dpoisson = differentiate(poisson, 0);
    const Cplx z0[1] = {Cplx(0, 0)};
    CHECK(std::abs(eval(dpoisson, std::span<const Cplx>(z0, 1), Cplx(0.07, 0))) < 1e-15);
}

TEST_CASE("derivatives agree with central differences at 100 points") {
    const std::vector<std::string> exprs = {
        "(1/pi)*zeta/(zeta^2+z^2)",
        "exp(z)*atan(z/(1+zeta))",
        "sqrt(1+z^2)+log(2+z)",
        "(z^3-2*z+1)/(2+zeta)",
    };
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> ux(-0.8, 0.8), uy(-0.05, 0.05),
        uxi(0.05, 0.4);
    const double h = 1e-5;
    int checked = 0;
    for (const auto& src : exprs) {
        const ExprPtr e = parse_expression(src, 1);
        const ExprPtr de = differentiate(e, 0);
        for (int i = 0; i < 25; ++i) {
            const Cplx z(ux(rng), uy(rng));
            const Cplx zeta(uxi(rng), 0.0);
            const Cplx zp[1] = {z + Cplx(h, 0)};
            const Cplx zm[1] = {z - Cplx(h, 0)};
            const Cplx zc[1] = {z};
            const Cplx fd = (eval(e, std::span<const Cplx>(zp, 1), zeta) -
                             eval(e, std::span<const Cplx>(zm, 1), zeta)) /
                            (2.0 * h);
            const Cplx sym = eval(de, std::span<const Cplx>(zc, 1), zeta);
            CHECK(std::abs(sym - fd) <= 1e-6 * (1.0 + std::abs(sym)));
            ++checked;
        }
    }
    CHECK(checked == 100);
}

TEST_CASE("substitution pins z") {
    const ExprPtr e = parse_expression("(1/pi)*zeta/(zeta^2+z^2)", 1);
    const Cplx x0[1] = {Cplx(0, 0)};
    const ExprPtr pinned = substitute_z(e, std::span<const Cplx>(x0, 1));
    CHECK_FALSE(depends_on_z(pinned));
    for (double xi : {0.3, 0.1, 0.05, 0.01, 0.003}) {
        const Cplx got = eval(pinned, std::span<const Cplx>(), Cplx(xi, 0));
        CHECK(got.real() == doctest::Approx(1.0 / (kPi * xi)).epsilon(1e-12));
    }
}

TEST_CASE("printer round-trips through the parser") {
    const std::vector<std::string> exprs = {"(1/pi)*zeta/(zeta^2+z^2)",
                                            "exp(-1/zeta^2)", "atan(z)-sqrt(1+z^2)"};
    for (const auto& src : exprs) {
        const ExprPtr e = parse_expression(src, 1);
        const ExprPtr back = parse_expression(to_string(e), 1);
        const Cplx zv[1] = {Cplx(0.3, 0.01)};
        CHECK(std::abs(eval(e, std::span<const Cplx>(zv, 1), Cplx(0.2, 0)) -
                       eval(back, std::span<const Cplx>(zv, 1), Cplx(0.2, 0))) < 1e-14);
    }
}

TEST_SUITE_END();
