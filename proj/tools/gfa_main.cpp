// Command-line front end: parse a JSON run config, drive the library, and
// emit reproducible reports (JSON + CSV). Exit codes: 0 success, 2 config
// error, 3 numeric failure, 4 verdict-negative.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "gfa/parser.hpp"
#include "gfa/serialize.hpp"

namespace gfa {
namespace {

struct CliOptions {
    std::string config_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    std::string precision = "standard";
    std::optional<long> budget;
};

struct RunContext {
    json config;
    std::string config_hash;
    std::filesystem::path out;
    std::uint64_t seed = 0;
    EvalOptions eval;
    long budget = 2000;
    ShrinkingFamily family;
    std::map<std::string, json> object_specs;
    std::map<std::string, Representative> objects; // resolved lazily
    std::vector<std::string> resolving;            // cycle guard
};

[[noreturn]] void config_fail(const std::string& where, const std::string& what) {
    throw ConfigError("at " + where + ": " + what);
}

double number_or_inf(const json& j, const std::string& where) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "inf" || s == "+inf") return kInf;
        if (s == "-inf") return -kInf;
    }
    config_fail(where, "expected a number or \"inf\"/\"-inf\"");
}

Ambient parse_ambient(const json& j, const std::string& where) {
    if (j.is_null()) return Ambient::full_space(1);
    const int k = j.value("k", 1);
    if (!j.contains("lo") && !j.contains("hi")) return Ambient::full_space(k);
    std::vector<double> lo, hi;
    for (const auto& v : j.at("lo")) lo.push_back(number_or_inf(v, where + "/lo"));
    for (const auto& v : j.at("hi")) hi.push_back(number_or_inf(v, where + "/hi"));
    if (static_cast<int>(lo.size()) != k || static_cast<int>(hi.size()) != k)
        config_fail(where, "bounds must have k entries");
    return Ambient::box(std::move(lo), std::move(hi));
}

ShrinkingFamily parse_family(const json& j) {
    if (!j.is_object()) config_fail("/family", "family spec required");
    const FamilyKind kind = family_kind_from_string(j.value("kind", "at_infinity"));
    const Ambient ambient = parse_ambient(j.value("ambient", json()), "/family/ambient");
    std::optional<std::vector<double>> x0;
    if (j.contains("x0")) {
        x0 = std::vector<double>{};
        if (j.at("x0").is_number())
            x0->push_back(j.at("x0").get<double>());
        else
            for (const auto& v : j.at("x0")) x0->push_back(v.get<double>());
    }
    const InfinitySide side = infinity_side_from_string(j.value("side", "both"));
    return make_family(kind, ambient, x0, side);
}

WeightFunction parse_weight(const json& j, const std::string& where) {
    if (j.is_null()) return WeightFunction::constant(1.0);
    if (j.is_number()) return WeightFunction::constant(j.get<double>());
    if (!j.is_object()) config_fail(where, "weight must be a number or an object");
    WeightFunction w = WeightFunction::constant(j.value("constant", 1.0));
    if (j.contains("polynomial"))
        w = w.product(WeightFunction::polynomial(j.at("polynomial").get<int>()));
    if (j.contains("boundary_blowup"))
        w = w.product(WeightFunction::boundary_blowup(j.at("boundary_blowup").get<int>()));
    if (j.contains("nu")) {
        PiecewiseNu nu;
        for (const auto& v : j.at("nu")) nu.nu.push_back(v.get<double>());
        w = w.product(WeightFunction::piecewise(std::move(nu)));
    }
    return w;
}

RealFunc parse_shape(const json& j, const std::string& where) {
    if (!j.is_object()) config_fail(where, "shape spec required");
    const std::string form = j.value("form", "");
    if (form == "triangle")
        return RealFunc::triangle(j.value("center", 0.0), j.at("halfwidth").get<double>(),
                                  j.value("height", 1.0));
    if (form == "gaussian")
        return RealFunc::gaussian(j.value("center", 0.0), j.at("sigma").get<double>(),
                                  j.value("amplitude", 1.0),
                                  j.value("cut", 8.0 * j.at("sigma").get<double>()));
    if (form == "raised_cosine")
        return RealFunc::raised_cosine(j.value("center", 0.0),
                                       j.at("halfwidth").get<double>(),
                                       j.value("amplitude", 1.0));
    if (form == "boxcar")
        return RealFunc::boxcar(j.value("height", 1.0), j.at("a").get<double>(),
                                j.at("b").get<double>());
    if (form == "expression")
        return RealFunc::expression(parse_expression(j.at("expr").get<std::string>(), 1),
                                    j.at("a").get<double>(), j.at("b").get<double>());
    if (form == "table") {
        std::vector<double> xs, ys;
        for (const auto& row : j.at("samples")) {
            xs.push_back(row.at(0).get<double>());
            ys.push_back(row.at(1).get<double>());
        }
        return RealFunc::table(std::move(xs), std::move(ys));
    }
    config_fail(where, "unknown shape form '" + form + "'");
}

TestFunction parse_testfunction(const json& j, const std::string& where) {
    if (j.is_null()) return TestFunction::gaussian();
    const std::string kind = j.value("kind", "gaussian");
    if (kind == "gaussian")
        return TestFunction::gaussian(j.value("center", 0.0), j.value("sigma", 1.0),
                                      j.value("halfwidth", 8.0));
    if (kind == "bump") {
        std::vector<double> poly{1.0};
        if (j.contains("poly")) {
            poly.clear();
            for (const auto& v : j.at("poly")) poly.push_back(v.get<double>());
        }
        return TestFunction::bump(j.value("center", 0.0), j.at("halfwidth").get<double>(),
                                  std::move(poly));
    }
    config_fail(where, "unknown test function kind '" + kind + "'");
}

std::vector<double> parse_xi_grid(const json& j, const std::string& where) {
    if (j.is_array()) {
        std::vector<double> out;
        for (const auto& v : j) out.push_back(v.get<double>());
        return out;
    }
    if (j.is_object())
        return geometric_grid(j.value("from", 1e-2), j.value("to", 1e-5),
                              j.value("per_decade", 4));
    config_fail(where, "grid must be an array or {from,to,per_decade}");
}

const Representative& resolve(RunContext& ctx, const std::string& name,
                              const std::string& where);

Representative build_object(RunContext& ctx, const json& j, const std::string& where) {
    const std::string kind = j.value("kind", "");
    if (kind == "product" || kind == "sum" || kind == "difference") {
        std::vector<Representative> parts;
        for (const auto& nm : j.at("of"))
            parts.push_back(resolve(ctx, nm.get<std::string>(), where + "/of"));
        if (parts.empty()) config_fail(where, "'of' must name at least one object");
        if (kind == "product") {
            Representative acc = parts[0];
            for (size_t i = 1; i < parts.size(); ++i) acc = mul(acc, parts[i]);
            return acc;
        }
        if (kind == "difference") {
            if (parts.size() != 2) config_fail(where, "difference takes two objects");
            return sub(parts[0], parts[1]);
        }
        Representative acc = parts[0];
        if (j.contains("coefficients")) {
            const auto& cs = j.at("coefficients");
            if (cs.size() != parts.size())
                config_fail(where, "coefficients must match 'of'");
            acc = scale(Cplx(cs.at(0).get<double>(), 0.0), parts[0]);
            for (size_t i = 1; i < parts.size(); ++i)
                acc = add(acc, scale(Cplx(cs.at(i).get<double>(), 0.0), parts[i]));
            return acc;
        }
        for (size_t i = 1; i < parts.size(); ++i) acc = add(acc, parts[i]);
        return acc;
    }
    if (kind == "scaled") {
        const Representative& base =
            resolve(ctx, j.at("of").get<std::string>(), where + "/of");
        Cplx c(1.0, 0.0);
        if (j.contains("c")) {
            if (j.at("c").is_number()) c = Cplx(j.at("c").get<double>(), 0.0);
            else c = Cplx(j.at("c").value("re", 0.0), j.at("c").value("im", 0.0));
        }
        return scale(c, base);
    }
    if (kind == "derivative") {
        const Representative& base =
            resolve(ctx, j.at("of").get<std::string>(), where + "/of");
        return differentiate(base, j.value("axis", 1) - 1);
    }
    if (kind == "expression") {
        const int k = ctx.family.dimension();
        ExprPtr e;
        try {
            e = parse_expression(j.at("expr").get<std::string>(), k);
        } catch (const ParseError& pe) {
            config_fail(where + "/expr", pe.what());
        }
        std::optional<SpaceIndex> sp;
        if (j.contains("n"))
            sp = space_index(j.at("n").get<int>(),
                             parse_weight(j.value("phi", json()), where + "/phi"),
                             ctx.family);
        return Representative::from_expression(e, k, sp,
                                               j.at("expr").get<std::string>());
    }
    if (kind == "delta")
        return embed_delta(j.value("x0", 0.0), j.value("order", 0), ctx.family);
    if (kind == "continuous_compact")
        return embed_compact(parse_shape(j.at("shape"), where + "/shape"), ctx.family);
    if (kind == "compact_distribution") {
        std::vector<DistPiece> pieces;
        for (const auto& p : j.at("pieces"))
            pieces.push_back(DistPiece{parse_shape(p.at("shape"), where + "/pieces"),
                                       p.value("order", 0)});
        return embed_compact(std::move(pieces), ctx.family);
    }
    if (kind == "constant_at_infinity") {
        std::optional<RealFunc> middle;
        if (j.contains("middle")) middle = parse_shape(j.at("middle"), where + "/middle");
        return embed_constant_at_infinity(j.value("c_minus", 0.0),
                                          j.value("c_plus", 0.0), middle, ctx.family,
                                          j.value("split", 0.0));
    }
    if (kind == "heaviside") return embed_heaviside(ctx.family);
    if (kind == "analytic") {
        ExprPtr e;
        try {
            e = parse_expression(j.at("expr").get<std::string>(), ctx.family.dimension());
        } catch (const ParseError& pe) {
            config_fail(where + "/expr", pe.what());
        }
        return embed_analytic(e, j.value("radius_floor", 1.0), ctx.family);
    }
    if (kind == "polynomial_at_infinity") {
        std::vector<double> coeffs;
        for (const auto& v : j.at("coefficients")) coeffs.push_back(v.get<double>());
        std::optional<RealFunc> rem;
        if (j.contains("remainder"))
            rem = parse_shape(j.at("remainder"), where + "/remainder");
        return embed_polynomial_at_infinity(coeffs, rem, ctx.family);
    }
    config_fail(where, "unknown object kind '" + kind + "'");
}

const Representative& resolve(RunContext& ctx, const std::string& name,
                              const std::string& where) {
    const auto hit = ctx.objects.find(name);
    if (hit != ctx.objects.end()) return hit->second;
    const auto spec = ctx.object_specs.find(name);
    if (spec == ctx.object_specs.end())
        config_fail(where, "object '" + name + "' is not defined");
    for (const std::string& open : ctx.resolving)
        if (open == name)
            config_fail(where, "object '" + name + "' references itself");
    ctx.resolving.push_back(name);
    Representative rep = build_object(ctx, spec->second, "/objects/" + name);
    ctx.resolving.pop_back();
    return ctx.objects.emplace(name, std::move(rep)).first->second;
}

// ---------------------------------------------------------------------------

void write_report(const RunContext& ctx, const std::string& command, json result) {
    json report;
    report["schema_version"] = 1;
    report["command"] = command;
    report["config_hash"] = ctx.config_hash;
    report["seed"] = ctx.seed;
    report["result"] = std::move(result);
    write_text_atomic(ctx.out / "report.json", report.dump(2) + "\n");

    // timestamps live in a sidecar so reports stay byte-identical
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[64];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    write_text_atomic(ctx.out / "run.meta",
                      std::string("finished_at=") + buf + "\n");
}

void write_csv(const RunContext& ctx, const std::string& name,
               const std::string& header, const std::vector<std::string>& rows) {
    std::ostringstream os;
    os << header << "\n";
    for (const std::string& r : rows) os << r << "\n";
    write_text_atomic(ctx.out / name, os.str());
}

json norm_block(const RunContext& ctx, const Representative& rep, const json& params) {
    const int n = params.contains("n") ? params.at("n").get<int>()
                                       : (rep.space() ? rep.space()->n : 2);
    const WeightFunction phi = parse_weight(params.value("phi", json()), "/norm/phi");
    const long budget = params.value("budget", ctx.budget);
    const double floor = params.value("zeta_floor", 1e-6);
    const SpaceIndex s = space_index(n, phi, ctx.family);
    const SampleGrid grid =
        sample(make_sector(n, ctx.family), budget, floor, ctx.seed);
    const NormCertificate cert = norm_estimate(rep, s, grid, ctx.eval);
    return to_json(cert);
}

int run_embed(RunContext& ctx, const json& params) {
    const std::string name = params.at("object").get<std::string>();
    const Representative& rep = resolve(ctx, name, "/embed/object");
    json result;
    result["object"] = name;
    result["body"] = rep.describe();
    result["provenance"] = rep.provenance();
    if (rep.space()) result["claimed_space"] = to_json(*rep.space());
    result["norm"] = norm_block(ctx, rep, params.value("norm", json::object()));

    // Eq-23-style recorded constant for quadrature-backed embeddings
    if (params.value("bound_certificate", false)) {
        const json& obj = ctx.config.at("objects").at(name);
        double integral_abs = 1.0;
        if (obj.contains("shape"))
            integral_abs = parse_shape(obj.at("shape"), "/shape").integral_abs();
        const int n = rep.space() ? rep.space()->n : 2;
        const SampleGrid grid = sample(make_sector(n, ctx.family),
                                       params.value("bound_budget", 2000L), 1e-6,
                                       ctx.seed);
        result["bound_certificate"] =
            to_json(certify_embedding_bound(rep, integral_abs, grid, ctx.eval));
    }
    write_report(ctx, "embed", result);
    std::vector<std::string> rows;
    const json& nj = result["norm"];
    rows.push_back(std::to_string(nj["space"]["n"].get<int>()) + "," +
                   csv_number(nj["estimate"].is_number()
                                  ? nj["estimate"].get<double>()
                                  : kInf) +
                   "," + (nj["stable"].get<bool>() ? "1" : "0"));
    write_csv(ctx, "norm_table.csv", "n,estimate,stable", rows);
    return 0;
}

int run_product(RunContext& ctx, const json& params) {
    const Representative& a = resolve(ctx, params.at("left").get<std::string>(), "/product/left");
    const Representative& b = resolve(ctx, params.at("right").get<std::string>(), "/product/right");
    const Representative prod = mul(a, b);
    json result;
    result["body"] = prod.describe();
    if (prod.space()) result["claimed_space"] = to_json(*prod.space());
    result["norm"] = norm_block(ctx, prod, params.value("norm", json::object()));
    write_report(ctx, "product", result);
    return 0;
}

int run_derive(RunContext& ctx, const json& params) {
    const Representative& f = resolve(ctx, params.at("object").get<std::string>(), "/derive/object");
    const int axis = params.value("axis", 1) - 1;
    const Representative df = differentiate(f, axis);
    json result;
    result["body"] = df.describe();
    if (df.space()) result["claimed_space"] = to_json(*df.space());
    result["norm"] = norm_block(ctx, df, params.value("norm", json::object()));
    write_report(ctx, "derive", result);
    return 0;
}

int run_norm(RunContext& ctx, const json& params) {
    const Representative& f = resolve(ctx, params.at("object").get<std::string>(), "/norm/object");
    json result;
    result["norm"] = norm_block(ctx, f, params);
    write_report(ctx, "norm", result);
    return 0;
}

int run_laurent(RunContext& ctx, const json& params) {
    const Representative& f = resolve(ctx, params.at("object").get<std::string>(), "/laurent/object");
    const int n = params.contains("n") ? params.at("n").get<int>()
                                       : (f.space() ? f.space()->n : 2);
    const double x = params.at("x").get<double>();
    const double r = params.value("radius", 1.0 / (2.0 * n));
    const int J = params.value("J", 16);
    const double xv[1] = {x};
    const LaurentSeries s =
        laurent(f, ctx.family, n, std::span<const double>(xv, 1), r, J, ctx.eval);
    json result = to_json(s);
    write_report(ctx, "laurent", result);
    std::vector<std::string> rows;
    for (int j = -J; j <= J; ++j)
        rows.push_back(std::to_string(j) + "," + csv_number(s.a(j).real()) + "," +
                       csv_number(s.a(j).imag()));
    write_csv(ctx, "laurent.csv", "j,re,im", rows);
    return 0;
}

int run_pointvalue(RunContext& ctx, const json& params) {
    const Representative& f = resolve(ctx, params.at("object").get<std::string>(), "/pointvalue/object");
    const double x = params.at("x").get<double>();
    const GeneralizedNumber pv = pointvalue(f, x);
    json result;
    result["index"] = pv.index();
    if (pv.expression()) result["body"] = to_string(pv.expression());
    json evals = json::array();
    std::vector<std::string> rows;
    if (params.contains("zetas")) {
        for (const auto& zj : params.at("zetas")) {
            const double xi = zj.get<double>();
            const Cplx v = pv(Cplx(xi, 0.0));
            evals.push_back(json{{"xi", xi}, {"value", to_json(v)}});
            rows.push_back(csv_number(xi) + "," + csv_number(v.real()) + "," +
                           csv_number(v.imag()));
        }
    }
    result["values"] = std::move(evals);
    const GnNorm norm = gn_norm(pv, pv.index());
    result["gn_norm"] = to_json(norm);
    write_report(ctx, "pointvalue", result);
    if (!rows.empty()) write_csv(ctx, "sweep.csv", "xi,re,im", rows);
    return 0;
}

int run_associate(RunContext& ctx, const json& params) {
    const Representative& f = resolve(ctx, params.at("object").get<std::string>(), "/associate/object");
    const TestFunction phi =
        parse_testfunction(params.value("test_function", json()), "/associate/test_function");
    const std::vector<double> grid = parse_xi_grid(params.value("grid", json::object()),
                                                   "/associate/grid");
    const AssociationReport rep = associate(f, phi, grid, ctx.eval);
    json result = to_json(rep);
    write_report(ctx, "associate", result);
    std::vector<std::string> rows;
    for (size_t i = 0; i < rep.xi.size(); ++i)
        rows.push_back(csv_number(rep.xi[i]) + "," + csv_number(rep.values[i].real()) +
                       "," + csv_number(rep.values[i].imag()));
    write_csv(ctx, "sweep.csv", "xi,re,im", rows);

    if (params.contains("expect")) {
        const json& e = params.at("expect");
        if (e.contains("divergent")) {
            const bool want = e.at("divergent").get<bool>();
            const bool got =
                rep.extrapolation.verdict == RichardsonResult::Verdict::divergent;
            if (want != got) return 4;
        }
        if (e.contains("limit_re")) {
            const double tol = e.value("tol", 1e-4);
            if (std::abs(rep.extrapolation.limit.real() - e.at("limit_re").get<double>()) >
                tol)
                return 4;
        }
    }
    return 0;
}

int run_sharp(RunContext& ctx, const json& params) {
    const Representative& f = resolve(ctx, params.at("object").get<std::string>(), "/sharp/object");
    SharpNeighborhood V;
    if (params.contains("K")) {
        V.K.lo = params.at("K").at(0).get<double>();
        V.K.hi = params.at("K").at(1).get<double>();
    }
    V.p = params.value("p", 0);
    V.q = params.value("q", 1);
    const std::vector<double> grid =
        parse_xi_grid(params.value("grid", json::object()), "/sharp/grid");
    const SharpVerdict verdict = sharp_membership(f, V, grid, ctx.eval);
    write_report(ctx, "sharp", to_json(verdict));
    if (params.contains("expect") && params.at("expect").contains("member"))
        if (params.at("expect").at("member").get<bool>() != verdict.member) return 4;
    return 0;
}

int run_null(RunContext& ctx, const json& params) {
    const Representative& f = resolve(ctx, params.at("object").get<std::string>(), "/null/object");
    const int n = params.contains("n") ? params.at("n").get<int>()
                                       : (f.space() ? f.space()->n : 2);
    std::vector<std::vector<double>> probes;
    if (params.contains("probes"))
        for (const auto& p : params.at("probes"))
            probes.push_back({p.get<double>()});
    else
        probes.push_back(ctx.family.witness(n));
    const NullTestReport rep =
        null_test(f, ctx.family, n, probes, params.value("J", 16),
                  params.value("tol", 1e-9), params.value("radius", 0.0), ctx.eval);
    write_report(ctx, "null", to_json(rep));
    if (params.contains("expect") && params.at("expect").contains("zero"))
        if (params.at("expect").at("zero").get<bool>() != rep.zero) return 4;
    return 0;
}

int run_psi(RunContext& ctx, const json& params) {
    std::vector<Representative> fs;
    if (params.contains("powers_of_zeta")) {
        const int P = params.at("powers_of_zeta").get<int>();
        const int n = params.value("n", 2);
        for (int p = 1; p <= P; ++p)
            fs.push_back(Representative::from_expression(
                powi(variable_zeta(), p), ctx.family.dimension(),
                space_index(n, WeightFunction::constant(1.0), ctx.family),
                "zeta^" + std::to_string(p)));
    } else {
        for (const auto& name : params.at("sequence"))
            fs.push_back(resolve(ctx, name.get<std::string>(), "/psi/sequence"));
    }
    const int n = params.value("n", 2);
    const WeightFunction phi = parse_weight(params.value("phi", json()), "/psi/phi");
    const SpaceIndex source = space_index(n, phi, ctx.family);
    const SampleGrid grid = sample(make_sector(n + 1, ctx.family),
                                   params.value("budget", ctx.budget),
                                   params.value("zeta_floor", 1e-4), ctx.seed);
    std::vector<double> eps{1e-1, 1e-2, 1e-3, 1e-4};
    if (params.contains("eps")) {
        eps.clear();
        for (const auto& v : params.at("eps")) eps.push_back(v.get<double>());
    }
    std::optional<Representative> limit;
    if (params.value("limit", "") == "zero")
        limit = Representative::from_expression(constant({0, 0}),
                                                ctx.family.dimension());
    else if (params.contains("limit") && params.at("limit").is_string() &&
             !params.at("limit").get<std::string>().empty())
        limit = resolve(ctx, params.at("limit").get<std::string>(), "/psi/limit");
    const PsiCertificate cert = construct_psi(
        source, fs, limit ? &*limit : nullptr, eps, grid, ctx.eval);
    write_report(ctx, "psi", to_json(cert));
    std::vector<std::string> q0rows, nurows;
    for (const auto& [e, q0] : cert.q0_table)
        q0rows.push_back(csv_number(e) + "," + std::to_string(q0));
    for (size_t r = 0; r < cert.nu.size(); ++r)
        nurows.push_back(std::to_string(r + 1) + "," + csv_number(cert.nu[r]));
    write_csv(ctx, "q0_table.csv", "epsilon,q0", q0rows);
    write_csv(ctx, "nu_table.csv", "r,nu", nurows);
    if (!cert.verified) return 4;
    return 0;
}

int run_chain(RunContext& ctx, const json& params) {
    const int base_n = params.value("base_n", 1);
    const WeightFunction phi = parse_weight(params.value("phi", json()), "/chain/phi");
    const int steps = params.value("steps", 3);
    std::vector<double> eps{1e-1, 1e-2, 1e-3, 1e-4};
    const SpaceChain chain =
        build_chain(space_index(base_n, phi, ctx.family), steps, eps);
    json result;
    json spaces = json::array();
    for (const SpaceIndex& s : chain.spaces) spaces.push_back(to_json(s));
    result["spaces"] = std::move(spaces);
    if (params.contains("corpus")) {
        std::vector<Representative> corpus;
        for (const auto& name : params.at("corpus"))
            corpus.push_back(resolve(ctx, name.get<std::string>(), "/chain/corpus"));
        const ChainCertificates certs =
            certify_chain(chain, corpus, params.value("budget", 400L),
                          params.value("zeta_floor", 1e-4), ctx.eval);
        result["certificates"] = to_json(certs);
        write_report(ctx, "chain", result);
        if (!certs.all_pass) return 4;
        return 0;
    }
    write_report(ctx, "chain", result);
    return 0;
}

Cplx parse_weight_entry(const json& v, const std::string& where) {
    if (v.is_number()) return Cplx(v.get<double>(), 0.0);
    if (v.is_string()) {
        // exact rationals like "3/4"
        const std::string s = v.get<std::string>();
        const auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Cplx(std::stod(s), 0.0);
            return Cplx(std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1)),
                        0.0);
        } catch (const std::exception&) {
            config_fail(where, "malformed weight '" + s + "'");
        }
    }
    if (v.is_object())
        return Cplx(v.value("re", 0.0), v.value("im", 0.0));
    config_fail(where, "weight must be number, string, or {re,im}");
}

int run_hull(RunContext& ctx, const json& params) {
    std::vector<Representative> gens;
    for (const auto& name : params.at("generators"))
        gens.push_back(resolve(ctx, name.get<std::string>(), "/hull/generators"));
    L1Hull h = make_hull(std::move(gens));
    json result;
    result["generators"] = h.generators.size();
    if (params.contains("product_with")) {
        std::vector<Representative> gens2;
        for (const auto& name : params.at("product_with"))
            gens2.push_back(resolve(ctx, name.get<std::string>(), "/hull/product_with"));
        h = hull_product(h, make_hull(std::move(gens2)));
        result["product_generators"] = h.generators.size();
    }
    int rc = 0;
    if (params.contains("member")) {
        std::vector<Cplx> weights;
        for (const auto& v : params.at("member").at("weights"))
            weights.push_back(parse_weight_entry(v, "/hull/member/weights"));
        const bool member = hull_member(h, weights);
        result["member"] = member;
        if (params.at("member").contains("expect") &&
            params.at("member").at("expect").get<bool>() != member)
            rc = 4;
    }
    write_report(ctx, "hull", result);
    return rc;
}

int run(const CliOptions& cli) {
    RunContext ctx;
    {
        std::ifstream is(cli.config_path);
        if (!is) throw ConfigError("cannot open config: " + cli.config_path);
        try {
            ctx.config = json::parse(is);
        } catch (const json::parse_error& e) {
            throw ConfigError(std::string("config JSON: ") + e.what());
        }
    }
    if (ctx.config.value("version", 1) != 1)
        throw ConfigError("unsupported config schema version");
    ctx.config_hash = fnv1a_hex(ctx.config.dump());
    ctx.out = cli.out_dir;
    std::filesystem::create_directories(ctx.out);
    ctx.seed = cli.seed ? *cli.seed : ctx.config.value("seed", std::uint64_t{0});
    ctx.budget = cli.budget ? *cli.budget : ctx.config.value("budget", long{2000});
    ctx.eval.precision =
        cli.precision == "extended" ? Precision::extended : Precision::standard;
    ctx.family = parse_family(ctx.config.value("family", json::object()));

    if (ctx.config.contains("objects")) {
        for (const auto& [name, spec] : ctx.config.at("objects").items())
            ctx.object_specs.emplace(name, spec);
        // references must resolve before any command runs
        for (const auto& [name, spec] : ctx.object_specs)
            resolve(ctx, name, "/objects");
    }

    const std::string command = ctx.config.at("command").get<std::string>();
    const json params = ctx.config.value("params", json::object());
    if (command == "embed") return run_embed(ctx, params);
    if (command == "product") return run_product(ctx, params);
    if (command == "derive") return run_derive(ctx, params);
    if (command == "norm") return run_norm(ctx, params);
    if (command == "laurent") return run_laurent(ctx, params);
    if (command == "pointvalue") return run_pointvalue(ctx, params);
    if (command == "associate") return run_associate(ctx, params);
    if (command == "sharp") return run_sharp(ctx, params);
    if (command == "null") return run_null(ctx, params);
    if (command == "psi") return run_psi(ctx, params);
    if (command == "chain") return run_chain(ctx, params);
    if (command == "hull") return run_hull(ctx, params);
    throw ConfigError("unknown command '" + command + "'");
}

} // namespace
} // namespace gfa

int main(int argc, char** argv) {
    gfa::CliOptions cli;
    CLI::App app{"generalized-function algebra toolkit"};
    app.add_option("--config", cli.config_path, "run configuration (JSON)")->required();
    app.add_option("--out", cli.out_dir, "output directory")->required();
    std::uint64_t seed_opt = 0;
    auto* seed_flag = app.add_option("--seed", seed_opt, "seed override");
    long budget_opt = 0;
    auto* budget_flag = app.add_option("--budget", budget_opt, "grid budget override");
    app.add_option("--precision", cli.precision, "standard|extended")
        ->check(CLI::IsMember({"standard", "extended"}));
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage errors are config errors
    }
    if (*seed_flag) cli.seed = seed_opt;
    if (*budget_flag) cli.budget = budget_opt;

    try {
        return gfa::run(cli);
    } catch (const gfa::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const gfa::NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    } catch (const gfa::EvalError& e) {
        std::cerr << "evaluation failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
