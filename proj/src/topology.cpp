#include "patchwork/topology.hpp"

#include <boost/pending/disjoint_sets.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace patchwork {

int SymmetricComplex::sign(LatticePoint p) const {
    auto it = signs.find(p);
    if (it == signs.end()) throw std::out_of_range("no vertex at " + to_string(p));
    return it->second;
}

int extended_sign(int sigma, LatticePoint p, Quadrant q) {
    int s = sigma;
    if (q.eps < 0 && (p.i % 2 != 0)) s = -s;
    if (q.delta < 0 && (p.j % 2 != 0)) s = -s;
    return s;
}

SymmetricComplex symmetrize(const SignedTriangulation& t) {
    auto report = validate_triangulation(t);
    if (!report.valid) throw std::invalid_argument("invalid input: " + report.violations.front());
    for (const auto& v : t.domain.vertices()) {
        if (v.i < 0 || v.j < 0) throw std::invalid_argument("domain leaves the positive quadrant");
    }
    SymmetricComplex c;
    c.base = normalized(t);
    std::map<LatticePoint, int> index;
    for (std::size_t q = 0; q < kQuadrants.size(); ++q) {
        const Quadrant quad = kQuadrants[q];
        SignedTriangulation copy;
        std::vector<LatticePoint> dom;
        for (const auto& v : c.base.domain.vertices()) dom.push_back(reflect(v, quad));
        copy.domain = ConvexPolygon(dom);
        for (std::size_t k = 0; k < c.base.vertices.size(); ++k) {
            LatticePoint p = reflect(c.base.vertices[k], quad);
            int s = extended_sign(c.base.signs[k], c.base.vertices[k], quad);
            copy.vertices.push_back(p);
            copy.signs.push_back(s);
            if (index.emplace(p, static_cast<int>(c.vertices.size())).second) {
                c.vertices.push_back(p);
                c.signs[p] = s;
            }
        }
        copy.triangles = c.base.triangles;
        copy = normalized(std::move(copy));
        for (const auto& tri : copy.triangles) {
            c.triangles.push_back({index.at(copy.vertices[static_cast<std::size_t>(tri[0])]),
                                   index.at(copy.vertices[static_cast<std::size_t>(tri[1])]),
                                   index.at(copy.vertices[static_cast<std::size_t>(tri[2])])});
        }
        c.copies[q] = std::move(copy);
    }
    return c;
}

PLCurve midline_curve(const SymmetricComplex& c) {
    PLCurve out;
    for (const auto& tri : c.triangles) {
        std::array<LatticePoint, 3> p{c.vertices[static_cast<std::size_t>(tri[0])],
                                      c.vertices[static_cast<std::size_t>(tri[1])],
                                      c.vertices[static_cast<std::size_t>(tri[2])]};
        std::array<int, 3> s{c.sign(p[0]), c.sign(p[1]), c.sign(p[2])};
        if (s[0] == s[1] && s[1] == s[2]) continue;
        std::vector<Point2> mids;
        for (int e = 0; e < 3; ++e) {
            if (s[e] != s[(e + 1) % 3]) mids.push_back(midpoint(to_point(p[e]), to_point(p[(e + 1) % 3])));
        }
        out.segments.push_back({mids[0], mids[1]});
    }
    return out;
}

namespace {

Rational abs_r(const Rational& r) { return r < 0 ? -r : r; }
Rational norm1(const Point2& p) { return abs_r(p.x) + abs_r(p.y); }

class NodeIndex {
public:
    int id(const Point2& p) {
        auto [it, inserted] = ids_.emplace(p, static_cast<int>(points_.size()));
        if (inserted) points_.push_back(p);
        return it->second;
    }
    std::size_t size() const { return points_.size(); }
    const Point2& point(int k) const { return points_[static_cast<std::size_t>(k)]; }

private:
    std::unordered_map<Point2, int, Point2Hash> ids_;
    std::vector<Point2> points_;
};

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : rank_(n), parent_(n), sets_(rank_.data(), parent_.data()) {
        for (std::size_t k = 0; k < n; ++k) sets_.make_set(k);
    }
    void unite(std::size_t a, std::size_t b) { sets_.union_set(a, b); }
    std::size_t find(std::size_t a) { return sets_.find_set(a); }

private:
    std::vector<std::size_t> rank_;
    std::vector<std::size_t> parent_;
    boost::disjoint_sets<std::size_t*, std::size_t*> sets_;
};

// Connected components of segments joined at equal keys; returns the
// component id per segment.
template <class Key>
std::vector<std::size_t> components_of(const std::vector<Segment>& segs, Key key, std::size_t* count) {
    NodeIndex nodes;
    std::vector<std::pair<int, int>> ends;
    for (const auto& s : segs) ends.emplace_back(nodes.id(key(s.a)), nodes.id(key(s.b)));
    UnionFind uf(nodes.size());
    for (auto [a, b] : ends) uf.unite(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    std::map<std::size_t, std::size_t> label;
    std::vector<std::size_t> out;
    for (auto [a, b] : ends) {
        auto root = uf.find(static_cast<std::size_t>(a));
        auto it = label.emplace(root, label.size()).first;
        out.push_back(it->second);
    }
    if (count) *count = label.size();
    return out;
}

}  // namespace

ProjectiveComplex::ProjectiveComplex(PLCurve curve, Rational radius) : curve_(std::move(curve)), radius_(radius) {
    if (radius_ <= 0) throw std::invalid_argument("radius must be positive");
    std::map<Point2, int> boundary_ends;
    for (const auto& s : curve_.segments) {
        for (const auto* p : {&s.a, &s.b}) {
            if (norm1(*p) > radius_) throw std::invalid_argument("curve leaves the carrier");
            if (on_boundary(*p)) ++boundary_ends[*p];
        }
    }
    for (const auto& [p, n] : boundary_ends) {
        auto it = boundary_ends.find(-p);
        if (it == boundary_ends.end() || it->second != n) {
            throw std::invalid_argument("sign rule violated at " + to_string(p));
        }
    }
}

bool ProjectiveComplex::on_boundary(const Point2& p) const { return norm1(p) == radius_; }

Point2 ProjectiveComplex::canonical(const Point2& p) const {
    if (!on_boundary(p)) return p;
    Point2 q = -p;
    return p < q ? q : p;
}

bool ProjectiveComplex::is_closed_manifold() const {
    std::unordered_map<Point2, int, Point2Hash> degree;
    for (const auto& s : curve_.segments) {
        if (s.a == s.b) return false;
        ++degree[canonical(s.a)];
        ++degree[canonical(s.b)];
    }
    return std::all_of(degree.begin(), degree.end(), [](const auto& kv) { return kv.second == 2; });
}

std::size_t ProjectiveComplex::boundary_crossings() const {
    std::set<Point2> seen;
    std::size_t n = 0;
    for (const auto& s : curve_.segments) {
        for (const auto* p : {&s.a, &s.b}) {
            if (on_boundary(*p) && seen.insert(canonical(*p)).second) ++n;
        }
    }
    return n;
}

std::size_t ProjectiveComplex::component_count() const {
    std::size_t n = 0;
    components_of(curve_.segments, [&](const Point2& p) { return canonical(p); }, &n);
    return n;
}

ProjectiveComplex projective_quotient(const SymmetricComplex& c, const PLCurve& l) {
    const auto& vs = c.base.domain.vertices();
    if (vs.size() != 3) throw std::invalid_argument("projective quotient needs a degree triangle");
    std::int64_t m = 0;
    for (const auto& v : vs) m = std::max(m, v.i + v.j);
    if (!(c.base.domain == degree_triangle(m))) {
        throw std::invalid_argument("projective quotient needs a degree triangle");
    }
    return ProjectiveComplex(l, Rational(m));
}

std::size_t Oval::size() const {
    std::size_t n = 1;
    for (const auto& c : children) n += c.size();
    return n;
}

std::size_t IsotopyCode::oval_count() const {
    std::size_t n = 0;
    for (const auto& o : ovals) n += o.size();
    return n;
}

namespace {

std::size_t depth(const Oval& o) {
    std::size_t d = 0;
    for (const auto& c : o.children) d = std::max(d, depth(c) + 1);
    return d;
}

std::string encode_forest(const std::vector<Oval>& ovals) {
    std::size_t leaves = 0;
    std::vector<std::tuple<std::size_t, std::size_t, std::string>> nested;
    for (const auto& o : ovals) {
        if (o.children.empty()) {
            ++leaves;
        } else {
            nested.emplace_back(depth(o), o.size(), "1⟨" + encode_forest(o.children) + "⟩");
        }
    }
    std::sort(nested.begin(), nested.end());
    std::vector<std::string> parts;
    if (leaves > 0) parts.push_back(std::to_string(leaves));
    for (auto& n : nested) parts.push_back(std::get<2>(n));
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? " ∪ " : "") + parts[k];
    return out;
}

// Sphere double cover: two diamonds glued by the identity along the boundary.
// A point in sheet h with coordinates p projects to p (h = +1) or -p (h = -1).
struct SpherePoint {
    int sheet;
    Point2 p;
};

SpherePoint deck(const SpherePoint& s) { return {-s.sheet, -s.p}; }

struct LiftedSegment {
    int sheet;
    Segment s;
};

// Lift of one two-sided component, starting in the upper sheet.
std::vector<LiftedSegment> lift(const ProjectiveComplex& pc, const std::vector<const Segment*>& segs) {
    std::unordered_map<Point2, std::vector<std::size_t>, Point2Hash> at;
    for (std::size_t k = 0; k < segs.size(); ++k) {
        at[pc.canonical(segs[k]->a)].push_back(k);
        at[pc.canonical(segs[k]->b)].push_back(k);
    }
    std::vector<int> sheet(segs.size(), 0);
    std::vector<std::size_t> stack{0};
    sheet[0] = 1;
    while (!stack.empty()) {
        std::size_t k = stack.back();
        stack.pop_back();
        for (const auto* end : {&segs[k]->a, &segs[k]->b}) {
            for (std::size_t other : at[pc.canonical(*end)]) {
                if (other == k) continue;
                const Point2& oe = pc.canonical(segs[other]->a) == pc.canonical(*end) ? segs[other]->a : segs[other]->b;
                int s = (oe == *end) ? sheet[k] : -sheet[k];
                if (sheet[other] == 0) {
                    sheet[other] = s;
                    stack.push_back(other);
                }
            }
        }
    }
    std::vector<LiftedSegment> out;
    for (std::size_t k = 0; k < segs.size(); ++k) {
        if (sheet[k] == 1) {
            out.push_back({1, *segs[k]});
        } else {
            out.push_back({-1, {-segs[k]->a, -segs[k]->b}});
        }
    }
    return out;
}

// Nonnegative rational in (0,1) from a counter, avoiding small denominators.
Rational jitter(std::size_t k, std::int64_t salt) {
    std::int64_t n = static_cast<std::int64_t>((k * 37 + static_cast<std::size_t>(salt) * 17 + 11) % 97) + 1;
    return Rational(n, 99);
}

// Crossing parity of the sphere path a -> b with `target`; empty when the
// path is not generic.
std::optional<int> crossing_parity(const SpherePoint& a, const SpherePoint& b, const Point2& equator,
                                   const std::vector<LiftedSegment>& target) {
    std::vector<std::pair<int, Segment>> legs;
    if (a.sheet == b.sheet) {
        legs.push_back({a.sheet, {a.p, b.p}});
    } else {
        legs.push_back({a.sheet, {a.p, equator}});
        legs.push_back({b.sheet, {equator, b.p}});
    }
    int parity = 0;
    for (const auto& [sheet, leg] : legs) {
        for (const auto& t : target) {
            if (t.sheet != sheet) continue;
            if (on_segment(t.s.a, leg.a, leg.b) || on_segment(t.s.b, leg.a, leg.b) ||
                on_segment(leg.a, t.s.a, t.s.b) || on_segment(leg.b, t.s.a, t.s.b)) {
                return std::nullopt;
            }
            if (segments_cross_properly(leg.a, leg.b, t.s.a, t.s.b)) parity ^= 1;
        }
    }
    return parity;
}

Point2 equator_point(const Rational& r, std::size_t k) {
    Rational s = jitter(k, 5);
    Point2 corner0{r, Rational(0)};
    Point2 corner1{Rational(0), r};
    Point2 base = corner0 + s * (corner1 - corner0);
    switch (k % 4) {
        case 0: return base;
        case 1: return {-base.x, base.y};
        case 2: return {base.x, -base.y};
        default: return -base;
    }
}

// Point of a lifted component strictly inside its sheet.
std::optional<SpherePoint> sample(const std::vector<LiftedSegment>& comp, const Rational& r, std::size_t k) {
    for (std::size_t tries = 0; tries < comp.size(); ++tries) {
        const auto& ls = comp[(k * 7 + tries) % comp.size()];
        Point2 p = ls.s.a + jitter(k + tries, 3) * (ls.s.b - ls.s.a);
        if (norm1(p) < r) return SpherePoint{ls.sheet, p};
    }
    return std::nullopt;
}

// Whether component `inner` (two-sided) lies in the disk bounded by `outer`.
bool contained(const std::vector<LiftedSegment>& outer, const std::vector<LiftedSegment>& inner, const Rational& r) {
    std::vector<LiftedSegment> outer2;
    for (const auto& ls : outer) outer2.push_back({-ls.sheet, {-ls.s.a, -ls.s.b}});
    for (std::size_t k = 0; k < 400; ++k) {
        auto x = sample(inner, r, k);
        auto z = sample(outer2, r, k + 1);
        if (!x || !z) continue;
        Point2 e = equator_point(r, k);
        auto p1 = crossing_parity(*x, *z, e, outer);
        auto p2 = crossing_parity(deck(*x), *z, e, outer);
        if (!p1 || !p2) continue;
        return *p1 == 1 || *p2 == 1;
    }
    throw std::runtime_error("no generic path found for nesting test");
}

}  // namespace

std::string encode(int one_sided, const std::vector<Oval>& ovals) {
    std::string forest = encode_forest(ovals);
    if (one_sided) return forest.empty() ? "J" : "J ∪ " + forest;
    return forest.empty() ? "0" : forest;
}

IsotopyCode isotopy_code(const ProjectiveComplex& pc) {
    if (!pc.is_closed_manifold()) throw std::domain_error("curve is not a closed 1-manifold");
    const auto& segs = pc.curve().segments;
    std::size_t ncomp = 0;
    auto comp = components_of(segs, [&](const Point2& p) { return pc.canonical(p); }, &ncomp);

    // crossings: glued nodes whose two ends sit at opposite representatives
    std::vector<std::size_t> crossings(ncomp, 0);
    std::unordered_map<Point2, std::pair<std::size_t, std::vector<Point2>>, Point2Hash> ends;
    for (std::size_t k = 0; k < segs.size(); ++k) {
        for (const auto* p : {&segs[k].a, &segs[k].b}) {
            if (!pc.on_boundary(*p)) continue;
            auto& e = ends[pc.canonical(*p)];
            e.first = comp[k];
            e.second.push_back(*p);
        }
    }
    for (const auto& [key, e] : ends) {
        if (e.second.size() == 2 && e.second[0] != e.second[1]) ++crossings[e.first];
    }

    IsotopyCode code;
    std::vector<std::size_t> two_sided;
    for (std::size_t c = 0; c < ncomp; ++c) {
        if (crossings[c] % 2 == 1) {
            ++code.one_sided;
        } else {
            two_sided.push_back(c);
        }
    }
    if (code.one_sided > 1) throw std::logic_error("more than one one-sided component");

    std::vector<std::vector<const Segment*>> members(ncomp);
    for (std::size_t k = 0; k < segs.size(); ++k) members[comp[k]].push_back(&segs[k]);
    std::vector<std::vector<LiftedSegment>> lifts;
    for (auto c : two_sided) lifts.push_back(lift(pc, members[c]));

    const std::size_t n = two_sided.size();
    std::vector<std::vector<std::size_t>> containers(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (a != b && contained(lifts[a], lifts[b], pc.radius())) containers[b].push_back(a);
        }
    }
    std::vector<std::optional<std::size_t>> parent(n);
    for (std::size_t b = 0; b < n; ++b) {
        for (auto a : containers[b]) {
            if (!parent[b] || containers[a].size() > containers[*parent[b]].size()) parent[b] = a;
        }
    }
    std::function<Oval(std::size_t)> build = [&](std::size_t k) {
        Oval o;
        for (std::size_t c = 0; c < n; ++c) {
            if (parent[c] == k) o.children.push_back(build(c));
        }
        return o;
    };
    for (std::size_t k = 0; k < n; ++k) {
        if (!parent[k]) code.ovals.push_back(build(k));
    }
    code.encoding = encode(code.one_sided, code.ovals);
    return code;
}

std::array<std::size_t, 4> quadrant_components(const PLCurve& curve) {
    std::array<std::size_t, 4> out{};
    for (std::size_t q = 0; q < kQuadrants.size(); ++q) {
        const Quadrant quad = kQuadrants[q];
        auto inside = [&](const Point2& p) { return sign(p.x) * quad.eps >= 0 && sign(p.y) * quad.delta >= 0; };
        std::vector<Segment> part;
        for (const auto& s : curve.segments) {
            if (!inside(s.a) || !inside(s.b)) continue;
            // a segment lying on an axis belongs to no open quadrant
            if ((sign(s.a.x) == 0 && sign(s.b.x) == 0) || (sign(s.a.y) == 0 && sign(s.b.y) == 0)) continue;
            part.push_back(s);
        }
        std::size_t count = 0;
        components_of(part, [](const Point2& p) { return p; }, &count);
        out[q] = count;
    }
    return out;
}

AffineCounts affine_counts(const PLCurve& curve, const Rational& radius) {
    AffineCounts out;
    components_of(curve.segments, [](const Point2& p) { return p; }, &out.components);
    for (const auto& s : curve.segments) {
        if (norm1(s.a) == radius) ++out.unbounded_ends;
        if (norm1(s.b) == radius) ++out.unbounded_ends;
    }
    return out;
}

std::size_t component_count(const PLCurve& curve) {
    std::size_t n = 0;
    components_of(curve.segments, [](const Point2& p) { return p; }, &n);
    return n;
}

std::size_t free_ends(const PLCurve& curve) {
    std::unordered_map<Point2, int, Point2Hash> degree;
    for (const auto& s : curve.segments) {
        ++degree[s.a];
        ++degree[s.b];
    }
    return static_cast<std::size_t>(
        std::count_if(degree.begin(), degree.end(), [](const auto& kv) { return kv.second == 1; }));
}

std::size_t harnack_bound(std::int64_t degree) {
    if (degree < 1) throw std::invalid_argument("degree must be positive");
    return static_cast<std::size_t>((degree - 1) * (degree - 2) / 2 + 1);
}

}  // namespace patchwork
