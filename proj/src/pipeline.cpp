#include "patchwork/pipeline.hpp"

#include "patchwork/charts.hpp"

#include <variant>

namespace patchwork {

BuildReport build(const PatchworkProblem& p) {
    SignedTriangulation t = p.triangulation();
    BuildReport r;
    r.name = p.name;
    r.degree = p.degree;
    r.harnack_bound = harnack_bound(p.degree);
    auto check = validate_triangulation(t);
    r.valid = check.valid;
    r.primitive = check.primitive;
    r.violations = check.violations;
    if (!r.valid) return r;

    ConvexifyReport cx = convexify(p);
    r.convexifiable = cx.feasible;
    if (cx.feasible) {
        HeightFunction h;
        for (const auto& [pt, v] : cx.heights) h.set(pt, v);
        for (const auto& v : t.vertices) r.heights.push_back(h.at(v));
    } else {
        r.note = "no convex height function; the curve is combinatorial only";
    }

    SymmetricComplex sc = symmetrize(t);
    if (t.domain == degree_triangle(p.degree)) {
        r.curve = midline_curve(sc).segments;
        ProjectiveComplex pc = projective_quotient(sc, PLCurve{r.curve});
        IsotopyCode code = isotopy_code(pc);
        r.code = code.encoding;
        r.components = code.components();
        r.one_sided = code.one_sided;
        r.ovals = code.oval_count();
        r.boundary_crossings = pc.boundary_crossings();
    } else {
        GluedComplex g = projective_topology(t_curve_chart(sc));
        r.curve = g.curve.segments;
        r.components = g.components;
        if (g.code) {
            r.code = g.code->encoding;
            r.one_sided = g.code->one_sided;
            r.ovals = g.code->oval_count();
        }
        if (!g.note.empty()) r.note = r.note.empty() ? g.note : r.note + "; " + g.note;
    }
    return r;
}

ConvexifyReport convexify(const ConvexPartition& p, const std::optional<HeightFunction>& given) {
    ConvexifyReport r;
    if (given) {
        r.given = true;
        r.violation = convexity_violation(p, *given);
        r.feasible = r.violation.empty();
        for (const auto& [pt, h] : given->values()) r.heights.emplace_back(pt, h);
        return r;
    }
    auto result = find_convexifying_heights(p);
    if (auto* h = std::get_if<HeightFunction>(&result)) {
        r.feasible = true;
        for (const auto& [pt, v] : h->values()) r.heights.emplace_back(pt, v);
    } else {
        const auto& cert = std::get<Infeasible>(result).certificate;
        r.certificate = cert.entries;
        r.certificate_verified = cert.verified;
    }
    return r;
}

ConvexifyReport convexify(const PatchworkProblem& p) {
    SignedTriangulation t = p.triangulation();
    auto check = validate_triangulation(t);
    if (!check.valid) throw InputError("invalid triangulation", check.violations);
    return convexify(as_partition(t), p.height_function());
}

NumericReport verify(const PatchworkProblem& p, const VerifyOptions& opts) {
    SignedTriangulation t = p.triangulation();
    auto check = validate_triangulation(t);
    if (!check.valid) throw InputError("invalid triangulation", check.violations);
    ConvexifyReport cx = convexify(p);
    if (!cx.feasible) {
        throw InfeasibleError(cx.given ? "heights do not convexify: " + cx.violation : "triangulation is not convexifiable");
    }
    HeightFunction h;
    for (const auto& [pt, v] : cx.heights) h.set(pt, v);
    return verify_patchwork(t, h, opts);
}

namespace {

Json chart_json(const Chart& c) {
    Json j;
    j["polygon"] = Json::array();
    for (const auto& v : c.polygon.vertices()) j["polygon"].push_back({v.i, v.j});
    j["adjoined"] = Json::array();
    for (const auto& n : c.adjoined) j["adjoined"].push_back({n.i, n.j});
    j["curve"] = Json::array();
    for (const auto& s : canonical_trace(c)) {
        j["curve"].push_back({{"quadrant", s.quadrant},
                              {"a", {to_string(s.a.x), to_string(s.a.y)}},
                              {"b", {to_string(s.b.x), to_string(s.b.y)}}});
    }
    return j;
}

}  // namespace

Json chart_report(const std::string& expr, const std::vector<LatticePoint>& adjoin, std::string_view mode) {
    if (mode != "" && mode != "affine" && mode != "projective") throw InputError("unknown mode " + std::string(mode));
    SparsePolynomial a = SparsePolynomial::parse(expr);
    Chart c;
    if (a.newton_polygon().size() <= 2) {
        c = quasihomogeneous_chart(a);
    } else if (a.size() == 3) {
        c = trinomial_chart(a);
    } else {
        throw InputError("charts are computed for trinomials and quasi-homogeneous polynomials");
    }
    for (const auto& n : adjoin) c = adjoin_side(c, n);
    Json j;
    j["v"] = 1;
    j["kind"] = "chart";
    j["polynomial"] = a.to_string();
    j["chart"] = chart_json(c);
    if (!mode.empty()) {
        GluedComplex g = mode == "affine" ? affine_topology(c) : projective_topology(c);
        j["topology"] = {{"carrier", g.carrier},
                         {"components", g.components},
                         {"unbounded_branches", g.unbounded_branches},
                         {"code", g.code ? Json(g.code->encoding) : Json(nullptr)},
                         {"note", g.note}};
    }
    return j;
}

}  // namespace patchwork
