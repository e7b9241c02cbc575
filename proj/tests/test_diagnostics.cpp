#include <doctest.h>

#include <cmath>
#include <random>

#include "gfa/diagnostics.hpp"
#include "gfa/serialize.hpp"
#include "helpers.hpp"

using namespace gfa;
using namespace gfa::test;

TEST_SUITE_BEGIN("diagnostics");

TEST_CASE("laurent: exact poles and the zero function") {
    const auto fam = at_inf();
    const auto inv = expr_rep("1/zeta", 1, fam);
    const double x5[1] = {5.0};
    // extended evaluation keeps the r^{-j} noise amplification below 1e-12
    EvalOptions ext;
    ext.precision = Precision::extended;
    const LaurentSeries s =
        laurent(inv, fam, 2, std::span<const double>(x5, 1), 0.1, 6, ext);
    CHECK(std::abs(s.a(-1) - Cplx(1, 0)) < 1e-12);
    for (int j = -6; j <= 6; ++j)
        if (j != -1) CHECK(std::abs(s.a(j)) < 1e-12);
    CHECK(s.residual < 1e-12);
    CHECK(s.M == 256);

    const auto zero = expr_rep("0*zeta", 1, fam);
    const LaurentSeries sz =
        laurent(zero, fam, 2, std::span<const double>(x5, 1), 0.1, 6);
    for (int j = -6; j <= 6; ++j) CHECK(std::abs(sz.a(j)) < 1e-14);
}

TEST_CASE("laurent: delta embedding matches the geometric-series oracle") {
    const auto fam = at_inf();
    const auto delta = embed_delta(0.0, 0, fam);
    const double x5[1] = {5.0};
    // x = 5 lies in O_4 (and O_2); (1/pi) zeta/(zeta^2+25) expands as
    // (1/(25 pi)) zeta sum (-zeta^2/25)^m
    const LaurentSeries s =
        laurent(delta, fam, 2, std::span<const double>(x5, 1), 0.1, 7);
    using LD = long double;
    const LD pi = 3.14159265358979323846L;
    const LD a1 = 1.0L / (25.0L * pi);
    const LD a3 = -1.0L / (625.0L * pi);
    const LD a5 = 1.0L / (15625.0L * pi);
    CHECK(std::abs(s.a(1).real() - static_cast<double>(a1)) <
          1e-9 * std::abs(static_cast<double>(a1)));
    CHECK(std::abs(s.a(3).real() - static_cast<double>(a3)) <
          1e-9 * std::abs(static_cast<double>(a3)));
    CHECK(std::abs(s.a(5).real() - static_cast<double>(a5)) <
          1e-9 * std::abs(static_cast<double>(a5)));
    // even coefficients vanish
    CHECK(std::abs(s.a(0)) < 1e-14);
    CHECK(std::abs(s.a(2)) < 1e-14);
}

TEST_CASE("laurent of the Heaviside embedding at x = 5") {
    // full-circle contours drive the tail body through both evaluation
    // paths; the expansion at x = 5 is 1 - zeta/(5 pi) + zeta^3/(375 pi) - ...
    const auto fam = make_family(FamilyKind::at_infinity, Ambient::full_space(1),
                                 std::nullopt, InfinitySide::right);
    const auto H = embed_heaviside(fam);
    const double x5[1] = {5.0};
    const LaurentSeries s = laurent(H, fam, 2, std::span<const double>(x5, 1), 0.1, 4);
    CHECK(std::abs(s.a(0) - Cplx(1, 0)) < 1e-9);
    CHECK(std::abs(s.a(1) - Cplx(-1.0 / (5.0 * kPi), 0)) < 1e-9);
    CHECK(std::abs(s.a(3) - Cplx(1.0 / (375.0 * kPi), 0)) < 1e-9);
    CHECK(std::abs(s.a(-1)) < 1e-9);
    CHECK(s.residual < 1e-8);
}

TEST_CASE("laurent preconditions") {
    const auto fam = at_inf();
    const auto inv = expr_rep("1/zeta", 1, fam);
    const double xin[1] = {1.0}; // not in O_2
    CHECK_THROWS_AS(laurent(inv, fam, 2, std::span<const double>(xin, 1), 0.1, 4),
                    ConfigError);
    const double x5[1] = {5.0};
    CHECK_THROWS_AS(laurent(inv, fam, 2, std::span<const double>(x5, 1), 0.6, 4),
                    ConfigError); // r >= 1/n
}

TEST_CASE("laurent invariants: reconstruction and coefficient bounds") {
    const auto fam = at_inf();
    const auto delta = embed_delta(0.0, 0, fam);
    const double x5[1] = {5.0};
    const LaurentSeries s =
        laurent(delta, fam, 2, std::span<const double>(x5, 1), 0.1, 7);

    // reconstruction on a third circle stays within 10x the residual
    double res2 = 0.0;
    for (int m = 0; m < s.M; ++m) {
        const double th = 2.0 * kPi * (m + 0.25) / s.M;
        const Cplx zeta = std::polar(s.radius, th);
        res2 = std::max(res2, std::abs(delta(Cplx(5.0, 0), zeta) - s.reconstruct(zeta)));
    }
    CHECK(res2 <= 10.0 * s.residual + 1e-13);

    // |a_j| <= 1.1 M r^{-j-n} with M the certified norm estimate at (2, 1)
    const SampleGrid g = sample(make_sector(2, fam), 500, 1e-6);
    const NormCertificate c =
        norm_estimate(delta, space_index(2, WeightFunction::constant(1.0), fam), g);
    for (int j = -7; j <= 7; ++j)
        CHECK(std::abs(s.a(j)) <=
              1.1 * c.estimate * std::pow(s.radius, -j - 2) + 1e-13);
}

TEST_CASE("null test: zero verdict, coefficient witness, norm witness") {
    const auto fam = at_inf();
    const auto delta = embed_delta(0.0, 0, fam);
    const auto closed = expr_rep("(1/pi)*zeta/(zeta^2+z^2)", 2, fam);
    std::vector<std::vector<double>> probes{{2.5}, {5.0}};

    // builder and parser produce the same function
    const auto diff = sub(delta, closed);
    const NullTestReport r0 = null_test(diff, fam, 2, probes, 16, 1e-9);
    CHECK(r0.zero);
    for (const auto& p : r0.probes) {
        CHECK(p.computed);
        REQUIRE(p.have_series);
        for (int j = -16; j <= 16; ++j) CHECK(std::abs(p.series.a(j)) < 1e-10);
    }

    // a 1e-3 zeta perturbation is caught with the right witness index
    const auto pert = add(diff, expr_rep("zeta/1000", 2, fam));
    const NullTestReport r1 = null_test(pert, fam, 2, probes, 16, 1e-6);
    CHECK_FALSE(r1.zero);
    CHECK(r1.witness.kind == NullWitness::Kind::coefficient);
    CHECK(r1.witness.j == 1);
    CHECK(std::abs(r1.witness.a) == doctest::Approx(1e-3).epsilon(1e-6));

    // exp(-1/zeta^2): real-axis data vanish to all orders, the sector norm
    // stage must still refuse the zero verdict
    const auto flat = expr_rep("exp(-1/zeta^2)", 2, fam);
    const NullTestReport r2 = null_test(flat, fam, 2, probes, 16, 1e-9);
    CHECK_FALSE(r2.zero);
    CHECK(r2.witness.kind == NullWitness::Kind::norm);
    CHECK(r2.witness.norm > 1e-6);
}

TEST_CASE("null test soundness: f - f is zero across the corpus") {
    const auto fam = at_inf();
    std::vector<Representative> corpus = {
        embed_delta(0.0, 0, fam),
        embed_compact(RealFunc::triangle(0.0, 1.0, 1.0), fam),
        expr_rep("zeta^2+1/zeta", 2, fam),
    };
    std::vector<std::vector<double>> probes{{2.5}};
    for (const auto& f : corpus) {
        const NullTestReport r = null_test(sub(f, f), fam, 2, probes, 12, 1e-9);
        CHECK(r.zero);
    }
}

TEST_CASE("pointvalue: closed forms and ring behaviour") {
    const auto fam = at_inf();
    const auto delta = embed_delta(0.0, 0, fam);
    const GeneralizedNumber pv = pointvalue(delta, 0.0);
    for (double xi : {0.3, 0.1, 0.05, 0.01, 0.004})
        CHECK(pv(Cplx(xi, 0)).real() == doctest::Approx(1.0 / (kPi * xi)).epsilon(1e-12));

    // pointvalue of f*f equals the square of the pointvalue
    const auto sq = mul(delta, delta);
    const GeneralizedNumber pv2 = pointvalue(sq, 0.0);
    for (double xi : {0.1, 0.02}) {
        const Cplx a = pv2(Cplx(xi, 0));
        const Cplx b = pv(Cplx(xi, 0)) * pv(Cplx(xi, 0));
        CHECK(std::abs(a - b) < 1e-12 * std::abs(a));
    }

    // constants pin to constants
    const GeneralizedNumber pc = pointvalue(expr_rep("3", 1, fam), 1.0);
    CHECK(pc(Cplx(0.2, 0.1)) == Cplx(3, 0));
}

TEST_CASE("generalized-number ring and invertibility probes") {
    const auto fam = at_inf();
    (void)fam;
    const GeneralizedNumber z =
        GeneralizedNumber::from_expression(parse_expression("zeta", 1), 1, "zeta");
    const auto vz = gn_invertibility_probe(z, 8);
    CHECK(vz.invertible_so_far);
    CHECK(vz.m == 1);
    CHECK(vz.bound == doctest::Approx(1.0).epsilon(1e-9));

    const GeneralizedNumber flat = GeneralizedNumber::from_expression(
        parse_expression("exp(-1/zeta^2)", 1), 2, "exp(-1/zeta^2)");
    const GnNorm norm2 = gn_norm(flat, 2);
    CHECK(norm2.estimate > 1e-6); // nonzero on the sector
    CHECK(norm2.stable);
    const auto vflat = gn_invertibility_probe(flat, 12);
    CHECK_FALSE(vflat.invertible_so_far);

    // gn_mul(a, 1/a) = 1 where defined
    const GeneralizedNumber zinv =
        GeneralizedNumber::from_expression(parse_expression("1/zeta", 1), 1, "1/zeta");
    const GeneralizedNumber one = gn_mul(z, zinv);
    CHECK(one.index() == 2);
    for (double xi : {0.3, 0.05})
        CHECK(std::abs(one(Cplx(xi, 0.01)) - Cplx(1, 0)) < 1e-14);

    // gn_add takes the max index
    CHECK(gn_add(z, flat).index() == 2);
}

TEST_CASE("pole order consistency: fitted slope matches the lowest Laurent index") {
    const auto fam = at_inf();
    struct Case {
        const char* src;
        int lowest;
    };
    for (const Case& c : {Case{"1/zeta + 2*zeta", -1}, Case{"zeta^2", 2},
                          Case{"3/zeta^2", -2}}) {
        const auto f = expr_rep(c.src, 3, fam);
        const double x5[1] = {5.0};
        const LaurentSeries s =
            laurent(f, fam, 3, std::span<const double>(x5, 1), 0.12, 6);
        int lowest = 99;
        const auto [jd, ad] = s.dominant();
        for (int j = -6; j <= 6; ++j)
            if (std::abs(s.a(j)) > 1e-9 * ad && j < lowest) lowest = j;
        CHECK(lowest == c.lowest);

        const GeneralizedNumber pv = pointvalue(f, 5.0);
        std::vector<double> xi = geometric_grid(0.2, 1e-4, 10);
        std::vector<double> mag;
        for (double v : xi) mag.push_back(std::abs(pv(Cplx(v, 0))));
        const LogLogFit fit = fit_loglog_tail(xi, mag, 8);
        CHECK(std::abs(fit.line.slope - c.lowest) < 0.05);
    }
}

TEST_CASE("pairing: unit mass, linearity, and the harmonic-extension values") {
    const auto fam = at_inf();
    const auto one = expr_rep("1", 2, fam);
    const TestFunction bump = TestFunction::bump(0.0, 1.0); // integral = 1
    const auto p1 = pair(one, bump);
    for (double xi : {0.25, 0.05, 0.01})
        CHECK(std::abs(p1.gn(Cplx(xi, 0)) - Cplx(1, 0)) < 1e-9);

    // linear in f and in phi
    const auto delta = embed_delta(0.0, 0, fam);
    const auto f2 = expr_rep("zeta+1", 2, fam);
    const TestFunction gauss = TestFunction::gaussian();
    const double xi = 0.05;
    const Cplx lhs =
        pair(add(delta, scale({2, 0}, f2)), gauss).gn(Cplx(xi, 0));
    const Cplx rhs = pair(delta, gauss).gn(Cplx(xi, 0)) +
                     2.0 * pair(f2, gauss).gn(Cplx(xi, 0));
    CHECK(std::abs(lhs - rhs) < 1e-8 * (1 + std::abs(lhs)));

    // support outside Omega is rejected
    const auto fam_half = make_family(FamilyKind::at_infinity,
                                      Ambient::box({0.0}, {kInf}), std::nullopt,
                                      InfinitySide::right);
    const auto d_half = embed_delta(5.0, 0, fam_half);
    CHECK_THROWS_AS(pair(d_half, TestFunction::gaussian(0.0)), ConfigError);
    // Prop-2 support hypothesis is reported
    CHECK_FALSE(pair(delta, gauss).support_in_On);
    const auto g_in_On = TestFunction::gaussian(6.0, 1.0, 2.0); // [4, 8] inside O_2
    CHECK(pair(delta, g_in_On).support_in_On);
}

TEST_CASE("association: delta, delta squared, and H*H - H") {
    const auto fam = at_inf();
    const auto delta = embed_delta(0.0, 0, fam);

    const auto a1 =
        associate(delta, TestFunction::gaussian(), geometric_grid(1e-2, 1e-5, 4));
    CHECK(a1.extrapolation.verdict == RichardsonResult::Verdict::converged);
    CHECK(std::abs(a1.extrapolation.limit.real() - 1.0) < 1e-6);
    CHECK(a1.extrapolation.order > 0.99);
    CHECK_FALSE(a1.extrapolation.low_confidence);

    const auto d2 = mul(delta, delta);
    const auto grid = geometric_grid(3.16e-4, 1e-6, 4);
    const auto a2 = associate(d2, TestFunction::gaussian(), grid);
    CHECK(a2.extrapolation.verdict == RichardsonResult::Verdict::divergent);
    CHECK(std::abs(a2.extrapolation.divergence_order - 1.0) < 0.02);
    // values match the closed form 1/(2 pi xi)
    for (size_t i = 0; i < a2.xi.size(); ++i) {
        const double oracle = 1.0 / (2.0 * kPi * a2.xi[i]);
        CHECK(std::abs(a2.values[i].real() - oracle) < 1e-6 * oracle);
    }

    // H*H - H converges slowly to 0 with fitted order below 1
    const auto famr = at_inf_right();
    const auto H = embed_heaviside(famr);
    const auto hh = sub(mul(H, H), H);
    const auto a3 =
        associate(hh, TestFunction::gaussian(), geometric_grid(1e-2, 1e-5, 4));
    CHECK(a3.extrapolation.verdict == RichardsonResult::Verdict::converged);
    CHECK(std::abs(a3.extrapolation.limit) < 1e-3);
    CHECK(a3.extrapolation.order < 1.0);
}

TEST_CASE("richardson extrapolation flags non-monotone noise") {
    std::vector<double> xi = geometric_grid(1e-1, 1e-4, 4);
    std::vector<Cplx> clean, noisy;
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (size_t i = 0; i < xi.size(); ++i) {
        clean.emplace_back(2.0 + 3.0 * xi[i], 0.0);
        noisy.emplace_back(2.0 + 3.0 * xi[i] + 0.05 * u(rng), 0.0);
    }
    const auto rc = richardson_extrapolate(xi, clean);
    CHECK_FALSE(rc.low_confidence);
    CHECK(std::abs(rc.limit.real() - 2.0) < 1e-10);
    CHECK(rc.order == doctest::Approx(1.0).epsilon(1e-6));
    const auto rn = richardson_extrapolate(xi, noisy);
    CHECK(rn.low_confidence);

    // a geometric grid is required
    std::vector<double> bad{0.1, 0.05, 0.03, 0.02, 0.015, 0.01,
                            0.005, 0.003, 0.002, 0.001};
    CHECK_THROWS_AS(richardson_extrapolate(bad, clean), ConfigError);
}

TEST_CASE("claimed-space conveniences") {
    const auto fam = at_inf();
    const auto delta = embed_delta(0.0, 0, fam);
    // laurent picks (family, n) from the claimed space
    const LaurentSeries s = laurent(delta, 5.0, 0.1, 4);
    CHECK(std::abs(s.a(1).real() - 1.0 / (25 * kPi)) < 1e-10);
    // null_test defaults its probe to the family witness of O_n
    const auto zero = sub(delta, delta);
    CHECK(null_test(zero).zero);
    CHECK_THROWS_AS(laurent(expr_rep("1/zeta"), 5.0, 0.1, 4), ConfigError);
}

TEST_CASE("association coherence with the classical pairing") {
    const auto fam = at_inf();
    const RealFunc rc = RealFunc::raised_cosine(0.2, 0.8, 1.3);
    const auto emb = embed_compact(rc, fam);
    const TestFunction gauss = TestFunction::gaussian();
    QuadOptions<double> q;
    q.abs_tol = 1e-13;
    q.rel_tol = 1e-12;
    const double classical =
        integrate([&](double x) { return Cplx(rc(x) * gauss(x), 0.0); },
                  rc.support_lo(), rc.support_hi(), q)
            .value.real();
    const auto rep = associate(emb, gauss, geometric_grid(1e-2, 1e-5, 4));
    CHECK(std::abs(rep.extrapolation.limit.real() - classical) < 1e-4);
}

TEST_SUITE_END();
