#include "patchwork/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace patchwork {

LatticePoint primitive(LatticePoint v) {
    if (v.i == 0 && v.j == 0) throw std::invalid_argument("zero vector has no primitive direction");
    std::int64_t g = std::gcd(v.i < 0 ? -v.i : v.i, v.j < 0 ? -v.j : v.j);
    return {v.i / g, v.j / g};
}

std::string to_string(LatticePoint p) {
    return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

std::size_t LatticePointHash::operator()(const LatticePoint& p) const noexcept {
    return std::hash<std::int64_t>{}(p.i * 1000003 + p.j);
}

namespace {

// Andrew's monotone chain; drops collinear points.
std::vector<LatticePoint> hull(std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<LatticePoint> h(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && doubled_area(h[k - 2], h[k - 1], p) <= 0) --k;
        h[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lo = k + 1; i-- > 0;) {
        while (k >= lo && doubled_area(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

}  // namespace

ConvexPolygon::ConvexPolygon(const std::vector<LatticePoint>& points) : vertices_(hull(points)) {
    if (vertices_.size() == 2 && vertices_[0] == vertices_[1]) vertices_.pop_back();
}

std::int64_t ConvexPolygon::doubled_area() const {
    if (vertices_.size() < 3) return 0;
    std::int64_t a = 0;
    for (std::size_t k = 0; k < vertices_.size(); ++k) {
        a += cross(vertices_[k], vertices_[(k + 1) % vertices_.size()]);
    }
    return a;
}

bool ConvexPolygon::contains(LatticePoint p) const { return contains(to_point(p)); }

bool ConvexPolygon::contains(const Point2& p) const {
    if (vertices_.empty()) return false;
    if (vertices_.size() == 1) return p == to_point(vertices_[0]);
    if (vertices_.size() == 2) return on_segment(p, to_point(vertices_[0]), to_point(vertices_[1]));
    for (std::size_t k = 0; k < vertices_.size(); ++k) {
        if (orientation(to_point(vertices_[k]), to_point(vertices_[(k + 1) % vertices_.size()]), p) < 0) {
            return false;
        }
    }
    return true;
}

bool ConvexPolygon::on_boundary(const Point2& p) const {
    if (vertices_.size() < 3) return contains(p);
    for (const auto& [a, b] : sides()) {
        if (on_segment(p, to_point(a), to_point(b))) return true;
    }
    return false;
}

std::vector<std::pair<LatticePoint, LatticePoint>> ConvexPolygon::sides() const {
    std::vector<std::pair<LatticePoint, LatticePoint>> out;
    if (vertices_.size() < 2) return out;
    if (vertices_.size() == 2) {
        out.emplace_back(vertices_[0], vertices_[1]);
        out.emplace_back(vertices_[1], vertices_[0]);
        return out;
    }
    for (std::size_t k = 0; k < vertices_.size(); ++k) {
        out.emplace_back(vertices_[k], vertices_[(k + 1) % vertices_.size()]);
    }
    return out;
}

std::vector<LatticePoint> ConvexPolygon::lattice_points() const {
    std::vector<LatticePoint> out;
    if (vertices_.empty()) return out;
    auto [lo_i, hi_i] = std::minmax_element(vertices_.begin(), vertices_.end(),
                                            [](auto a, auto b) { return a.i < b.i; });
    auto [lo_j, hi_j] = std::minmax_element(vertices_.begin(), vertices_.end(),
                                            [](auto a, auto b) { return a.j < b.j; });
    for (auto i = lo_i->i; i <= hi_i->i; ++i) {
        for (auto j = lo_j->j; j <= hi_j->j; ++j) {
            if (contains(LatticePoint{i, j})) out.push_back({i, j});
        }
    }
    return out;
}

std::optional<std::pair<LatticePoint, LatticePoint>> ConvexPolygon::side_with_normal(LatticePoint normal) const {
    for (const auto& sr : outward_normal_rays(*this)) {
        if (sr.ray.direction == primitive(normal)) return std::make_pair(sr.from, sr.to);
    }
    return std::nullopt;
}

bool operator==(const ConvexPolygon& a, const ConvexPolygon& b) {
    if (a.vertices_.size() != b.vertices_.size()) return false;
    if (a.vertices_.empty()) return true;
    auto it = std::find(b.vertices_.begin(), b.vertices_.end(), a.vertices_[0]);
    if (it == b.vertices_.end()) return false;
    auto offset = static_cast<std::size_t>(it - b.vertices_.begin());
    for (std::size_t k = 0; k < a.vertices_.size(); ++k) {
        if (a.vertices_[k] != b.vertices_[(k + offset) % b.vertices_.size()]) return false;
    }
    return true;
}

ConvexPolygon newton_polygon(const std::vector<LatticePoint>& support) {
    if (support.empty()) throw std::invalid_argument("empty polynomial");
    return ConvexPolygon(support);
}

bool interiors_disjoint(const ConvexPolygon& a, const ConvexPolygon& b) {
    // weak separation along some side normal of either polygon
    auto separated_by = [](const ConvexPolygon& p, const ConvexPolygon& q) {
        for (const auto& sr : outward_normal_rays(p)) {
            std::int64_t limit = dot(sr.ray.direction, sr.from);
            bool all_outside = std::all_of(q.vertices().begin(), q.vertices().end(),
                                           [&](LatticePoint v) { return dot(sr.ray.direction, v) >= limit; });
            if (all_outside) return true;
        }
        return false;
    };
    if (a.size() < 3 || b.size() < 3) return true;
    return separated_by(a, b) || separated_by(b, a);
}

std::vector<SideRay> outward_normal_rays(const ConvexPolygon& poly) {
    if (poly.size() < 2) throw std::invalid_argument("no sides");
    std::vector<SideRay> out;
    for (const auto& [p, q] : poly.sides()) {
        LatticePoint d = q - p;
        // for a counterclockwise boundary the outside is to the right
        LatticePoint n = primitive(LatticePoint{d.j, -d.i});
        out.push_back({p, q, Ray{n, midpoint(to_point(p), to_point(q))}});
    }
    return out;
}

int SignedTriangulation::index_of(LatticePoint p) const {
    auto it = std::find(vertices.begin(), vertices.end(), p);
    return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

int SignedTriangulation::sign_at(LatticePoint p) const {
    int k = index_of(p);
    if (k < 0) throw std::out_of_range("no vertex at " + to_string(p));
    return signs.at(static_cast<std::size_t>(k));
}

std::int64_t SignedTriangulation::triangle_area(std::size_t t) const {
    const auto& tri = triangles.at(t);
    return doubled_area(vertices.at(tri[0]), vertices.at(tri[1]), vertices.at(tri[2]));
}

SignedTriangulation normalized(SignedTriangulation t) {
    for (auto& tri : t.triangles) {
        if (doubled_area(t.vertices.at(tri[0]), t.vertices.at(tri[1]), t.vertices.at(tri[2])) < 0) {
            std::swap(tri[1], tri[2]);
        }
    }
    return t;
}

TriangulationReport validate_triangulation(const SignedTriangulation& input) {
    TriangulationReport report;
    auto& v = report.violations;
    const auto n = static_cast<int>(input.vertices.size());

    if (input.domain.size() < 3) v.push_back("domain is not a polygon");
    if (input.signs.size() != input.vertices.size()) v.push_back("sign count differs from vertex count");
    for (int s : input.signs) {
        if (s != 1 && s != -1) {
            v.push_back("sign outside {+1,-1}");
            break;
        }
    }
    std::set<LatticePoint> seen;
    for (const auto& p : input.vertices) {
        if (!seen.insert(p).second) v.push_back("duplicate vertex " + to_string(p));
        if (!input.domain.contains(p)) v.push_back("vertex outside domain " + to_string(p));
    }
    for (const auto& tri : input.triangles) {
        for (int k : tri) {
            if (k < 0 || k >= n) {
                v.push_back("triangle index out of range");
                report.valid = false;
                return report;
            }
        }
    }
    const SignedTriangulation t = normalized(input);

    std::vector<bool> used(input.vertices.size(), false);
    std::int64_t area_sum = 0;
    bool primitive_all = true;
    std::map<std::pair<int, int>, int> directed;
    for (std::size_t k = 0; k < t.triangles.size(); ++k) {
        const auto& tri = t.triangles[k];
        std::int64_t a = t.triangle_area(k);
        if (a == 0) {
            v.push_back("degenerate triangle " + std::to_string(k));
            continue;
        }
        area_sum += a;
        if (a != 1) primitive_all = false;
        for (int e = 0; e < 3; ++e) {
            used[static_cast<std::size_t>(tri[e])] = true;
            ++directed[{tri[e], tri[(e + 1) % 3]}];
        }
    }
    if (area_sum != t.domain.doubled_area()) v.push_back("area sum mismatch");

    std::int64_t boundary_length = 0;  // in lattice steps
    for (const auto& [edge, count] : directed) {
        auto [a, b] = edge;
        if (count > 1) {
            v.push_back("edge used twice with the same orientation");
            continue;
        }
        if (directed.count({b, a})) continue;
        Point2 pa = to_point(t.vertices[static_cast<std::size_t>(a)]);
        Point2 pb = to_point(t.vertices[static_cast<std::size_t>(b)]);
        bool on_side = false;
        for (const auto& [s0, s1] : t.domain.sides()) {
            if (on_segment(pa, to_point(s0), to_point(s1)) && on_segment(pb, to_point(s0), to_point(s1))) {
                on_side = true;
                break;
            }
        }
        if (!on_side) {
            v.push_back("unpaired interior edge " + to_string(t.vertices[static_cast<std::size_t>(a)]) + "-" +
                        to_string(t.vertices[static_cast<std::size_t>(b)]));
        } else {
            LatticePoint d = t.vertices[static_cast<std::size_t>(b)] - t.vertices[static_cast<std::size_t>(a)];
            boundary_length += std::gcd(d.i < 0 ? -d.i : d.i, d.j < 0 ? -d.j : d.j);
        }
    }
    std::int64_t perimeter = 0;
    for (const auto& [s0, s1] : t.domain.sides()) {
        LatticePoint d = s1 - s0;
        perimeter += std::gcd(d.i < 0 ? -d.i : d.i, d.j < 0 ? -d.j : d.j);
    }
    if (t.domain.size() >= 3 && boundary_length != perimeter) v.push_back("boundary edges do not tile the domain");

    for (std::size_t k = 0; k < used.size(); ++k) {
        if (!used[k]) v.push_back("unused vertex " + to_string(t.vertices[k]));
    }

    report.valid = v.empty();
    report.primitive = report.valid && primitive_all;
    return report;
}

std::vector<std::pair<int, int>> interior_edges(const SignedTriangulation& t) {
    std::map<std::pair<int, int>, int> count;
    for (const auto& tri : t.triangles) {
        for (int e = 0; e < 3; ++e) {
            int a = tri[e], b = tri[(e + 1) % 3];
            ++count[{std::min(a, b), std::max(a, b)}];
        }
    }
    std::vector<std::pair<int, int>> out;
    for (const auto& [e, c] : count) {
        if (c == 2) out.push_back(e);
    }
    return out;
}

ConvexPolygon degree_triangle(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("degree must be positive");
    return ConvexPolygon({{0, 0}, {m, 0}, {0, m}});
}

}  // namespace patchwork
