#include "gfa/serialize.hpp"

#include <cstdio>
#include <fstream>

namespace gfa {

json to_json(Cplx v) { return json{{"re", v.real()}, {"im", v.imag()}}; }

namespace {

json bound_json(double v) {
    if (std::isfinite(v)) return v;
    return v > 0 ? json("inf") : json("-inf");
}

} // namespace

json to_json(const Ambient& a) {
    json j;
    j["k"] = a.dimension();
    json lo = json::array(), hi = json::array();
    for (double v : a.lo()) lo.push_back(bound_json(v));
    for (double v : a.hi()) hi.push_back(bound_json(v));
    j["lo"] = lo;
    j["hi"] = hi;
    return j;
}

json to_json(const ShrinkingFamily& f) {
    json j;
    j["kind"] = to_string(f.kind());
    j["ambient"] = to_json(f.ambient());
    if (f.kind() == FamilyKind::at_infinity) j["side"] = to_string(f.side());
    if (!f.base_point().empty()) j["x0"] = f.base_point();
    return j;
}

json to_json(const WeightFunction& w) {
    json j;
    j["constant"] = w.constant_part();
    j["polynomial_exponent"] = w.polynomial_exponent();
    j["blowup_exponent"] = w.blowup_exponent();
    if (w.step()) j["nu"] = w.step()->nu;
    j["describe"] = w.describe();
    return j;
}

json to_json(const SpaceIndex& s) {
    return json{{"n", s.n}, {"phi", to_json(s.phi)}, {"family", to_json(s.family)}};
}

json to_json(const GridProvenance& p) {
    return json{{"n", p.n},
                {"budget", p.budget},
                {"zeta_floor", p.zeta_floor},
                {"seed", p.seed},
                {"refine_level", p.refine_level},
                {"count", p.count},
                {"strategy", p.strategy}};
}

json to_json(const SampleGrid& g) {
    json j;
    j["provenance"] = to_json(provenance_of(g));
    json pts = json::array();
    for (const GridPoint& p : g.points) {
        json e;
        e["x"] = p.x;
        e["y"] = p.y;
        e["zeta"] = to_json(p.zeta);
        e["branch"] = to_string(p.branch);
        e["cell"] = p.cell;
        pts.push_back(std::move(e));
    }
    j["points"] = std::move(pts);
    return j;
}

json to_json(const KernelStats& k) {
    return json{{"alpha_min", bound_json(k.alpha_min)},
                {"kernel_sup", k.kernel_sup},
                {"kernel_evals", k.kernel_evals}};
}

json to_json(const NormCertificate& c) {
    return json{{"space", to_json(c.space)},
                {"estimate", bound_json(c.estimate)},
                {"coarse", bound_json(c.coarse)},
                {"stable", c.stable},
                {"grid", to_json(c.grid)},
                {"kernel", to_json(c.kernel)},
                {"note", c.note}};
}

json to_json(const LaurentSeries& s) {
    json j;
    j["x"] = s.x;
    j["radius"] = s.radius;
    j["J"] = s.J;
    j["M"] = s.M;
    j["residual"] = s.residual;
    json coeff = json::array();
    for (int k = -s.J; k <= s.J; ++k) {
        json e;
        e["j"] = k;
        e["a"] = to_json(s.a(k));
        coeff.push_back(std::move(e));
    }
    j["coefficients"] = std::move(coeff);
    return j;
}

json to_json(const RichardsonResult& r) {
    json j;
    j["verdict"] =
        r.verdict == RichardsonResult::Verdict::converged ? "converged" : "divergent";
    j["limit"] = to_json(r.limit);
    j["order"] = bound_json(r.order);
    j["divergence_order"] = bound_json(r.divergence_order);
    j["confidence_spread"] = r.confidence;
    j["low_confidence"] = r.low_confidence;
    return j;
}

json to_json(const NullTestReport& r) {
    json j;
    j["verdict"] = r.zero ? "zero" : "nonzero";
    j["semantics"] = "zero on all probes to tolerance";
    j["tol"] = r.tol;
    j["J"] = r.J;
    j["radius"] = r.radius;
    switch (r.witness.kind) {
        case NullWitness::Kind::none: j["witness"] = nullptr; break;
        case NullWitness::Kind::coefficient:
            j["witness"] = json{{"kind", "coefficient"},
                                {"x", r.witness.x},
                                {"j", r.witness.j},
                                {"a", to_json(r.witness.a)}};
            break;
        case NullWitness::Kind::norm:
            j["witness"] = json{{"kind", "norm"},
                                {"x", r.witness.x},
                                {"norm", bound_json(r.witness.norm)}};
            break;
    }
    json probes = json::array();
    for (const LaurentProbe& p : r.probes) {
        json e;
        e["x"] = p.x;
        e["conclusive"] = p.computed;
        e["sector_norm"] = bound_json(p.sector_norm);
        if (!p.issue.empty()) e["issue"] = p.issue;
        if (p.have_series) e["residual"] = p.series.residual;
        probes.push_back(std::move(e));
    }
    j["probes"] = std::move(probes);
    return j;
}

json to_json(const ModerateVerdict& v) {
    return json{{"pass", v.pass},
                {"N", v.N},
                {"constant", v.constant},
                {"slope", v.fit.line.slope},
                {"overflow", v.overflow},
                {"zero", v.zero}};
}

json to_json(const NegligibleVerdict& v) {
    return json{{"negligible", v.negligible},
                {"fail_q", v.fail_q},
                {"constant", v.constant},
                {"slope", v.fit.line.slope},
                {"zero", v.zero}};
}

json to_json(const GnNorm& n) {
    return json{{"n", n.n},
                {"estimate", bound_json(n.estimate)},
                {"coarse", bound_json(n.coarse)},
                {"stable", n.stable},
                {"samples", n.sample_count},
                {"zeta_floor", n.zeta_floor}};
}

json to_json(const InvertibilityVerdict& v) {
    json j;
    j["verdict"] = v.invertible_so_far ? "invertible-so-far" : "noninvertible-evidence";
    if (v.invertible_so_far) {
        j["m"] = v.m;
        j["bound"] = v.bound;
        j["stable"] = v.stable;
    } else {
        j["evidence"] = v.evidence;
    }
    return j;
}

json to_json(const SharpVerdict& v) {
    json j;
    j["member"] = v.member;
    if (v.member) {
        j["C"] = v.C;
        j["eta"] = v.eta;
    }
    json fits = json::array();
    for (const SharpOrderFit& f : v.per_order)
        fits.push_back(json{{"order", f.order},
                            {"slope", f.fit.line.slope},
                            {"pass", f.pass}});
    j["per_order"] = std::move(fits);
    return j;
}

json to_json(const PsiCertificate& c) {
    json j;
    j["source"] = to_json(c.source);
    j["psi"] = to_json(c.psi);
    j["nu"] = c.nu;
    j["phi_sup"] = c.phi_sup;
    json q0 = json::array();
    for (const auto& [eps, q] : c.q0_table)
        q0.push_back(json{{"eps", eps}, {"q0", q}});
    j["q0_table"] = std::move(q0);
    j["verified"] = c.verified;
    j["grid_points"] = c.grid_points;
    j["sequence_length"] = c.sequence_length;
    j["limit"] = c.limit_note;
    j["violations"] = c.violations;
    return j;
}

json to_json(const ChainCertificates& c) {
    json j;
    json prods = json::array();
    for (const auto& p : c.products)
        prods.push_back(json{{"step", p.step},
                             {"i", p.i},
                             {"j", p.j},
                             {"lhs", bound_json(p.lhs)},
                             {"rhs", bound_json(p.rhs)},
                             {"pass", p.pass}});
    json ders = json::array();
    for (const auto& d : c.derivatives)
        ders.push_back(json{{"step", d.step},
                            {"i", d.i},
                            {"estimate", bound_json(d.estimate)},
                            {"stable", d.stable}});
    json norms = json::array();
    for (const auto& s : c.norms)
        norms.push_back(json{{"step", s.step},
                             {"i", s.i},
                             {"estimate", bound_json(s.estimate)},
                             {"stable", s.stable}});
    j["products"] = std::move(prods);
    j["derivatives"] = std::move(ders);
    j["norms"] = std::move(norms);
    j["applicable_elements"] = c.applicable_elements;
    j["all_pass"] = c.all_pass;
    return j;
}

json to_json(const BoundedVerdict& v) {
    json j;
    j["found"] = v.found;
    if (v.found) {
        j["p"] = v.p;
        j["bound"] = v.bound;
        j["estimates"] = v.estimates;
    }
    return j;
}

json to_json(const ExtractionReport& r) {
    json j;
    j["premise_estimates"] = r.premise_estimates;
    j["uniformly_bounded"] = r.uniformly_bounded;
    j["subsequence"] = r.subsequence;
    j["certified"] = r.certified;
    j["psi"] = to_json(r.psi);
    j["note"] = r.note;
    return j;
}

json to_json(const EmbeddingBoundCertificate& c) {
    return json{{"recorded_constant", c.recorded_constant},
                {"observed_sup", c.observed_sup},
                {"integral_abs", c.integral_abs},
                {"kernel_sup", c.kernel_sup},
                {"alpha_min", bound_json(c.alpha_min)},
                {"pass", c.pass}};
}

json to_json(const AssociationReport& r) {
    json j;
    json sweep = json::array();
    for (size_t i = 0; i < r.xi.size(); ++i)
        sweep.push_back(json{{"xi", r.xi[i]}, {"value", to_json(r.values[i])}});
    j["sweep"] = std::move(sweep);
    j["extrapolation"] = to_json(r.extrapolation);
    j["support_in_On"] = r.support_in_On;
    return j;
}

std::string csv_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
}

void write_text_atomic(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw ConfigError("cannot open for writing: " + tmp.string());
        os << content;
        if (!os) throw ConfigError("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

} // namespace gfa
