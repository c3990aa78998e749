#include "patchwork/io.hpp"

#include <algorithm>

namespace patchwork {

namespace {

void require_version(const Json& j) {
    if (!j.is_object()) throw InputError("document must be a JSON object");
    if (!j.contains("v") || j.at("v") != 1) throw InputError("unsupported schema version (expected \"v\": 1)");
}

template <class T>
T field(const Json& j, const char* key) {
    if (!j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw InputError(std::string("field \"") + key + "\" has the wrong type");
    }
}

Json point_json(LatticePoint p) { return Json::array({p.i, p.j}); }

LatticePoint point_from(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
        throw InputError("lattice point must be [i, j]");
    }
    return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

Json polygon_json(const ConvexPolygon& p) {
    Json out = Json::array();
    for (const auto& v : p.vertices()) out.push_back(point_json(v));
    return out;
}

ConvexPolygon polygon_from(const Json& j) {
    if (!j.is_array()) throw InputError("polygon must be a list of points");
    std::vector<LatticePoint> pts;
    for (const auto& p : j) pts.push_back(point_from(p));
    return ConvexPolygon(pts);
}

Json rational_point(const Point2& p) { return Json::array({to_string(p.x), to_string(p.y)}); }

Point2 rational_point_from(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw InputError("point must be [\"p/q\", \"p/q\"]");
    try {
        return {parse_rational(j[0].get<std::string>()), parse_rational(j[1].get<std::string>())};
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    } catch (const nlohmann::json::exception&) {
        throw InputError("rational coordinates must be strings");
    }
}

}  // namespace

SignedTriangulation PatchworkProblem::triangulation() const {
    if (degree < 1) throw InputError("degree must be positive");
    if (signs.size() != vertices.size()) throw InputError("signs and vertices differ in length");
    if (heights && heights->size() != vertices.size()) throw InputError("heights and vertices differ in length");
    if (vertices.empty()) throw InputError("no vertices");
    std::vector<std::string> outside;
    for (const auto& v : vertices) {
        if (v.i < 0 || v.j < 0 || v.i + v.j > degree) outside.push_back("vertex " + to_string(v) + " leaves the degree triangle");
    }
    if (!outside.empty()) throw InputError("vertices leave the degree triangle", outside);
    for (const auto& tri : triangles) {
        for (int k : tri) {
            if (k < 0 || static_cast<std::size_t>(k) >= vertices.size()) throw InputError("triangle index out of range");
        }
    }
    for (int s : signs) {
        if (s != 1 && s != -1) throw InputError("signs must be +1 or -1");
    }
    SignedTriangulation t;
    t.domain = ConvexPolygon(vertices);
    t.vertices = vertices;
    t.triangles = triangles;
    t.signs = signs;
    return t;
}

std::optional<HeightFunction> PatchworkProblem::height_function() const {
    if (!heights) return std::nullopt;
    HeightFunction h;
    for (std::size_t k = 0; k < vertices.size(); ++k) h.set(vertices[k], (*heights)[k]);
    return h;
}

PatchworkProblem make_problem(const SignedTriangulation& t, std::int64_t degree, const std::string& name,
                              const std::optional<HeightFunction>& heights) {
    PatchworkProblem p;
    p.degree = degree;
    p.vertices = t.vertices;
    p.triangles = t.triangles;
    p.signs = t.signs;
    p.name = name;
    if (heights) {
        std::vector<std::int64_t> h;
        for (const auto& v : t.vertices) h.push_back(heights->at(v));
        p.heights = h;
    }
    return p;
}

Json to_json(const PatchworkProblem& p) {
    Json j;
    j["v"] = 1;
    j["kind"] = "problem";
    j["degree"] = p.degree;
    j["metadata"] = {{"name", p.name}, {"notes", p.notes}};
    j["vertices"] = Json::array();
    for (const auto& v : p.vertices) j["vertices"].push_back(point_json(v));
    j["triangles"] = p.triangles;
    j["signs"] = p.signs;
    if (p.heights) j["heights"] = *p.heights;
    return j;
}

PatchworkProblem problem_from_json(const Json& j) {
    require_version(j);
    PatchworkProblem p;
    p.degree = field<std::int64_t>(j, "degree");
    if (!j.contains("vertices") || !j.at("vertices").is_array()) throw InputError("missing field \"vertices\"");
    for (const auto& v : j.at("vertices")) p.vertices.push_back(point_from(v));
    p.triangles = field<std::vector<std::array<int, 3>>>(j, "triangles");
    p.signs = field<std::vector<int>>(j, "signs");
    if (j.contains("heights") && !j.at("heights").is_null()) p.heights = field<std::vector<std::int64_t>>(j, "heights");
    if (j.contains("metadata")) {
        const auto& m = j.at("metadata");
        if (!m.is_object()) throw InputError("metadata must be an object");
        p.name = m.value("name", "");
        p.notes = m.value("notes", "");
    }
    p.triangulation();
    return p;
}

Json to_json(const ConvexPartition& p) {
    Json j;
    j["v"] = 1;
    j["kind"] = "partition";
    j["domain"] = polygon_json(p.domain);
    j["cells"] = Json::array();
    for (const auto& c : p.cells) j["cells"].push_back(polygon_json(c));
    return j;
}

ConvexPartition partition_from_json(const Json& j) {
    require_version(j);
    ConvexPartition p;
    if (!j.contains("cells") || !j.at("cells").is_array()) throw InputError("missing field \"cells\"");
    std::vector<LatticePoint> all;
    for (const auto& c : j.at("cells")) {
        p.cells.push_back(polygon_from(c));
        all.insert(all.end(), p.cells.back().vertices().begin(), p.cells.back().vertices().end());
    }
    p.domain = j.contains("domain") ? polygon_from(j.at("domain")) : ConvexPolygon(all);
    return p;
}

bool is_partition(const Json& j) { return j.is_object() && j.value("kind", "") == "partition"; }

Json to_json(const BuildReport& r) {
    Json j;
    j["v"] = 1;
    j["kind"] = "build-report";
    j["name"] = r.name;
    j["degree"] = r.degree;
    j["valid"] = r.valid;
    j["primitive"] = r.primitive;
    j["violations"] = r.violations;
    j["convexifiable"] = r.convexifiable;
    j["heights"] = r.heights;
    j["code"] = r.code ? Json(*r.code) : Json(nullptr);
    j["components"] = r.components;
    j["one_sided"] = r.one_sided;
    j["ovals"] = r.ovals;
    j["harnack_bound"] = r.harnack_bound;
    j["boundary_crossings"] = r.boundary_crossings;
    j["curve"] = Json::array();
    for (const auto& s : r.curve) j["curve"].push_back(Json::array({rational_point(s.a), rational_point(s.b)}));
    j["note"] = r.note;
    return j;
}

BuildReport build_report_from_json(const Json& j) {
    require_version(j);
    BuildReport r;
    r.name = field<std::string>(j, "name");
    r.degree = field<std::int64_t>(j, "degree");
    r.valid = field<bool>(j, "valid");
    r.primitive = field<bool>(j, "primitive");
    r.violations = field<std::vector<std::string>>(j, "violations");
    r.convexifiable = field<bool>(j, "convexifiable");
    r.heights = field<std::vector<std::int64_t>>(j, "heights");
    if (!j.at("code").is_null()) r.code = field<std::string>(j, "code");
    r.components = field<std::size_t>(j, "components");
    r.one_sided = field<int>(j, "one_sided");
    r.ovals = field<std::size_t>(j, "ovals");
    r.harnack_bound = field<std::size_t>(j, "harnack_bound");
    r.boundary_crossings = field<std::size_t>(j, "boundary_crossings");
    for (const auto& s : j.at("curve")) {
        if (!s.is_array() || s.size() != 2) throw InputError("curve segment must be a pair of points");
        r.curve.push_back({rational_point_from(s[0]), rational_point_from(s[1])});
    }
    r.note = field<std::string>(j, "note");
    return r;
}

bool operator==(const ConvexifyReport& a, const ConvexifyReport& b) {
    auto same_entries = std::equal(a.certificate.begin(), a.certificate.end(), b.certificate.begin(),
                                   b.certificate.end(), [](const auto& x, const auto& y) {
                                       return x.label == y.label && x.multiplier == y.multiplier;
                                   });
    return a.feasible == b.feasible && a.given == b.given && a.heights == b.heights && same_entries &&
           a.certificate_verified == b.certificate_verified && a.violation == b.violation;
}

Json to_json(const ConvexifyReport& r) {
    Json j;
    j["v"] = 1;
    j["kind"] = "convexify-report";
    j["status"] = r.feasible ? "convex" : "infeasible";
    j["given"] = r.given;
    j["heights"] = Json::array();
    for (const auto& [p, h] : r.heights) j["heights"].push_back({{"point", point_json(p)}, {"height", h}});
    j["certificate"] = Json::array();
    for (const auto& e : r.certificate) {
        j["certificate"].push_back({{"label", e.label}, {"multiplier", to_string(e.multiplier)}});
    }
    j["certificate_verified"] = r.certificate_verified;
    j["violation"] = r.violation;
    return j;
}

ConvexifyReport convexify_report_from_json(const Json& j) {
    require_version(j);
    ConvexifyReport r;
    auto status = field<std::string>(j, "status");
    if (status != "convex" && status != "infeasible") throw InputError("unknown status " + status);
    r.feasible = status == "convex";
    r.given = field<bool>(j, "given");
    for (const auto& h : j.at("heights")) r.heights.emplace_back(point_from(h.at("point")), h.at("height").get<std::int64_t>());
    for (const auto& e : j.at("certificate")) {
        r.certificate.push_back({e.at("label").get<std::string>(), parse_big_rational(e.at("multiplier").get<std::string>())});
    }
    r.certificate_verified = field<bool>(j, "certificate_verified");
    r.violation = field<std::string>(j, "violation");
    return r;
}

Json to_json(const NumericReport& r) {
    Json j;
    j["v"] = 1;
    j["kind"] = "verify-report";
    j["t"] = to_string(r.t);
    j["resolution"] = r.resolution;
    j["quadrant_components"] = r.quadrant_components;
    j["affine_components"] = r.affine_components;
    j["code"] = r.code ? Json(r.code->encoding) : Json(nullptr);
    j["combinatorial_code"] = r.combinatorial ? Json(r.combinatorial->encoding) : Json(nullptr);
    j["stabilized"] = r.stabilized;
    j["mismatch_fraction"] = r.mismatch_fraction;
    j["steps"] = Json::array();
    for (const auto& s : r.steps) {
        j["steps"].push_back({{"t", to_string(s.t)}, {"code", s.code ? Json(*s.code) : Json(nullptr)}, {"components", s.components}});
    }
    return j;
}

Json error_json(const std::string& code, const std::string& message, const std::vector<std::string>& violations) {
    return {{"v", 1}, {"code", code}, {"message", message}, {"violations", violations}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace patchwork
