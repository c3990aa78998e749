#include "patchwork/charts.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace patchwork {

std::vector<ChartSegment> Chart::in_quadrant(int q) const {
    std::vector<ChartSegment> out;
    for (const auto& s : curve) {
        if (s.quadrant == q) out.push_back(s);
    }
    return out;
}

PLCurve Chart::global_curve() const {
    PLCurve out;
    for (const auto& s : curve) {
        if (s.is_point()) continue;
        const Quadrant q = kQuadrants[static_cast<std::size_t>(s.quadrant)];
        out.segments.push_back({reflect(s.a, q), reflect(s.b, q)});
    }
    return out;
}

std::array<std::size_t, 4> Chart::points_per_quadrant() const {
    std::array<std::size_t, 4> n{};
    for (const auto& s : curve) {
        if (s.is_point()) ++n[static_cast<std::size_t>(s.quadrant)];
    }
    return n;
}

std::vector<ChartSide> chart_sides(const Chart& c) {
    std::vector<ChartSide> out;
    if (c.polygon.size() < 2) return out;
    for (const auto& sr : outward_normal_rays(c.polygon)) {
        bool inserted = std::any_of(c.adjoined.begin(), c.adjoined.end(), [&](LatticePoint n) {
            return n == sr.ray.direction || -n == sr.ray.direction;
        });
        out.push_back({sr.from, sr.to, sr.ray.direction, inserted});
    }
    return out;
}

namespace {

int quadrant_sign(const BigRational& c, LatticePoint w, Quadrant q) {
    int s = sign(c);
    if (q.eps < 0 && w.i % 2 != 0) s = -s;
    if (q.delta < 0 && w.j % 2 != 0) s = -s;
    return s;
}

}  // namespace

Chart trinomial_chart(const SparsePolynomial& a) {
    if (a.size() != 3) throw std::invalid_argument("trinomial_chart needs exactly three terms");
    auto support = a.support();
    if (doubled_area(support[0], support[1], support[2]) == 0) {
        throw std::invalid_argument("use quasihomogeneous_chart");
    }
    Chart c;
    c.polygon = ConvexPolygon(support);
    for (std::size_t q = 0; q < kQuadrants.size(); ++q) {
        std::array<int, 3> s{};
        for (std::size_t k = 0; k < 3; ++k) s[k] = quadrant_sign(a.coefficient(support[k]), support[k], kQuadrants[q]);
        if (s[0] == s[1] && s[1] == s[2]) continue;
        std::size_t odd = (s[0] == s[1]) ? 2 : (s[0] == s[2] ? 1 : 0);
        Point2 v = to_point(support[odd]);
        Point2 m1 = midpoint(v, to_point(support[(odd + 1) % 3]));
        Point2 m2 = midpoint(v, to_point(support[(odd + 2) % 3]));
        c.curve.push_back({static_cast<int>(q), m1, m2});
    }
    return c;
}

Chart quasihomogeneous_chart(const SparsePolynomial& a) {
    if (a.is_zero()) throw std::invalid_argument("empty polynomial");
    ConvexPolygon poly = a.newton_polygon();
    if (poly.size() > 2) throw std::invalid_argument("Newton polygon is not a segment");
    Chart c;
    c.polygon = poly;
    if (poly.is_point()) return c;

    LatticePoint p0 = poly.vertices()[0];
    LatticePoint p1 = poly.vertices()[1];
    LatticePoint e = primitive(p1 - p0);
    std::int64_t len = e.i != 0 ? (p1.i - p0.i) / e.i : (p1.j - p0.j) / e.j;

    // a = x^p0 Q(x^e1 y^e2)
    std::vector<BigRational> coeffs(static_cast<std::size_t>(len + 1));
    for (std::int64_t k = 0; k <= len; ++k) coeffs[static_cast<std::size_t>(k)] = a.coefficient(p0 + LatticePoint{k * e.i, k * e.j});
    UnivariatePolynomial q(coeffs);
    if (gcd(q, q.derivative()).degree() >= 1) throw std::invalid_argument("peripherally degenerate");

    UnivariatePolynomial both = q * q.reflected();
    UnivariatePolynomial magnitudes = both.divmod(gcd(both, both.derivative())).first;
    BigRational bound = root_bound(magnitudes);
    auto intervals = isolate_roots(magnitudes, BigRational(0), bound);
    SturmSequence pos(q);
    SturmSequence neg(q.reflected());

    const auto count = static_cast<std::int64_t>(intervals.size());
    for (std::int64_t r = 0; r < count; ++r) {
        const auto& [lo, hi] = intervals[static_cast<std::size_t>(r)];
        bool positive_root = pos.count(lo, hi) == 1;
        bool negative_root = neg.count(lo, hi) == 1;
        Point2 at = to_point(p0) + Rational(r + 1, count + 1) * (to_point(p1) - to_point(p0));
        for (std::size_t qd = 0; qd < kQuadrants.size(); ++qd) {
            const Quadrant quad = kQuadrants[qd];
            int s = 1;
            if (quad.eps < 0 && e.i % 2 != 0) s = -s;
            if (quad.delta < 0 && e.j % 2 != 0) s = -s;
            if ((s > 0 && positive_root) || (s < 0 && negative_root)) {
                c.curve.push_back({static_cast<int>(qd), at, at});
            }
        }
    }
    return c;
}

Chart t_curve_chart(const SymmetricComplex& sc) {
    Chart c;
    c.polygon = sc.base.domain;
    for (std::size_t q = 0; q < kQuadrants.size(); ++q) {
        const auto& copy = sc.copies[q];
        for (const auto& tri : copy.triangles) {
            std::array<std::size_t, 3> k{static_cast<std::size_t>(tri[0]), static_cast<std::size_t>(tri[1]),
                                         static_cast<std::size_t>(tri[2])};
            std::array<int, 3> s{copy.signs[k[0]], copy.signs[k[1]], copy.signs[k[2]]};
            if (s[0] == s[1] && s[1] == s[2]) continue;
            std::vector<Point2> mids;
            for (std::size_t e = 0; e < 3; ++e) {
                if (s[e] != s[(e + 1) % 3]) {
                    Point2 m = midpoint(to_point(copy.vertices[k[e]]), to_point(copy.vertices[k[(e + 1) % 3]]));
                    mids.push_back(reflect(m, kQuadrants[q]));
                }
            }
            c.curve.push_back({static_cast<int>(q), mids[0], mids[1]});
        }
    }
    return c;
}

Chart adjoin_side(const Chart& c, LatticePoint normal) {
    if (normal.i == 0 && normal.j == 0) throw std::invalid_argument("zero normal");
    const LatticePoint n = primitive(normal);
    if (c.polygon.empty()) throw std::invalid_argument("empty chart");
    if (c.polygon.size() >= 2 && c.polygon.side_with_normal(n)) return c;

    const LatticePoint d = primitive(LatticePoint{-n.j, n.i});
    Chart out;
    out.adjoined = c.adjoined;
    out.adjoined.push_back(n);
    const auto& vs = c.polygon.vertices();
    if (c.polygon.is_point()) {
        out.polygon = ConvexPolygon({vs[0], vs[0] + d});
        out.curve = c.curve;
        return out;
    }

    // cut from the vertex extreme in n to the one extreme in -n
    auto by = [&](LatticePoint dir) {
        LatticePoint best = vs[0];
        for (const auto& v : vs) {
            auto a = dot(dir, v), b = dot(dir, best);
            if (a > b || (a == b && dot(d, v) < dot(d, best))) best = v;
        }
        return best;
    };
    const LatticePoint top = by(n);
    const LatticePoint bottom = by(-n);
    const Point2 A = to_point(top), B = to_point(bottom);
    const Point2 D = to_point(d);
    const int dside = sign(cross(B - A, D));
    auto side_of = [&](const Point2& p) { return sign(cross(B - A, p - A)) * dside; };

    // a cut along a side of the polygon leaves one piece empty; curve ends on
    // that side still cross the inserted parallelogram
    bool has_minus = false, has_plus = false;
    for (const auto& v : vs) {
        int s = side_of(to_point(v));
        has_minus = has_minus || s < 0;
        has_plus = has_plus || s > 0;
    }
    const bool boundary_cut = !(has_minus && has_plus);

    std::vector<LatticePoint> verts{top, bottom, top + d, bottom + d};
    for (const auto& v : vs) {
        int s = side_of(to_point(v));
        if (s < 0) verts.push_back(v);
        if (s > 0) verts.push_back(v + d);
    }
    out.polygon = ConvexPolygon(verts);

    for (int q = 0; q < 4; ++q) {
        std::vector<std::pair<Point2, Point2>> minus, plus;
        std::set<Point2> on_cut_minus, on_cut_plus, points;
        for (const auto& s : c.curve) {
            if (s.quadrant != q) continue;
            if (s.is_point()) {
                int sd = side_of(s.a);
                if (sd == 0) {
                    points.insert(s.a);
                } else if (sd < 0) {
                    minus.emplace_back(s.a, s.b);
                } else {
                    plus.emplace_back(s.a, s.b);
                }
                continue;
            }
            int sa = side_of(s.a), sb = side_of(s.b);
            if (sa == 0 && sb == 0) throw std::domain_error("curve runs along the cut");
            std::vector<std::pair<Point2, Point2>> pieces;
            if (sa * sb < 0) {
                Rational fa = cross(B - A, s.a - A), fb = cross(B - A, s.b - A);
                Point2 x = s.a + (fa / (fa - fb)) * (s.b - s.a);
                pieces = {{s.a, x}, {x, s.b}};
            } else {
                pieces = {{s.a, s.b}};
            }
            for (const auto& [p, r] : pieces) {
                int side = side_of(p) != 0 ? side_of(p) : side_of(r);
                auto& bucket = side < 0 ? minus : plus;
                bucket.emplace_back(p, r);
                for (const auto* e : {&p, &r}) {
                    if (side_of(*e) == 0) (side < 0 ? on_cut_minus : on_cut_plus).insert(*e);
                }
            }
        }
        for (const auto& [p, r] : minus) out.curve.push_back({q, p, r});
        for (const auto& [p, r] : plus) out.curve.push_back({q, p + D, r + D});
        std::set<Point2> cut(points);
        cut.insert(on_cut_minus.begin(), on_cut_minus.end());
        cut.insert(on_cut_plus.begin(), on_cut_plus.end());
        for (const auto& x : cut) {
            bool low = points.count(x) || on_cut_minus.count(x);
            bool high = points.count(x) || on_cut_plus.count(x);
            if ((low && high) || (boundary_cut && (low || high))) out.curve.push_back({q, x, x + D});
        }
    }
    return out;
}

namespace {

Chart translated(const Chart& c, LatticePoint shift) {
    Chart out;
    std::vector<LatticePoint> vs;
    for (const auto& v : c.polygon.vertices()) vs.push_back(v + shift);
    out.polygon = ConvexPolygon(vs);
    out.adjoined = c.adjoined;
    Point2 s = to_point(shift);
    for (const auto& seg : c.curve) out.curve.push_back({seg.quadrant, seg.a + s, seg.b + s});
    return out;
}

Chart to_axes(const Chart& c) {
    const auto& vs = c.polygon.vertices();
    std::int64_t mi = vs[0].i, mj = vs[0].j;
    for (const auto& v : vs) {
        mi = std::min(mi, v.i);
        mj = std::min(mj, v.j);
    }
    return translated(c, {-mi, -mj});
}

std::vector<std::vector<Point2>> reflected_cells(const ConvexPolygon& p) {
    std::vector<std::vector<Point2>> cells;
    for (const auto& q : kQuadrants) {
        std::vector<Point2> cell;
        for (const auto& v : p.vertices()) cell.push_back(reflect(to_point(v), q));
        cells.push_back(std::move(cell));
    }
    return cells;
}

// Contracting a chain of sides to a corner point is modelled by joining
// every curve end on the chain straight to that corner.
void contract(Chart& c, const std::vector<std::pair<LatticePoint, LatticePoint>>& chain, const Point2& corner) {
    std::vector<ChartSegment> added;
    for (int q = 0; q < 4; ++q) {
        std::set<Point2> ends;
        for (const auto& s : c.curve) {
            if (s.quadrant != q || s.is_point()) continue;
            for (const auto* p : {&s.a, &s.b}) {
                for (const auto& [u, w] : chain) {
                    if (on_segment(*p, to_point(u), to_point(w))) ends.insert(*p);
                }
            }
        }
        for (const auto& p : ends) {
            if (!(p == corner)) added.push_back({q, p, corner});
        }
    }
    c.curve.insert(c.curve.end(), added.begin(), added.end());
}

bool in_open_cone(LatticePoint v, LatticePoint from, LatticePoint to) {
    return cross(from, v) > 0 && cross(v, to) > 0;
}

}  // namespace

GluedComplex affine_topology(const Chart& input) {
    Chart c = adjoin_side(adjoin_side(input, {0, -1}), {-1, 0});
    c = to_axes(c);
    std::vector<std::pair<LatticePoint, LatticePoint>> chain;
    for (const auto& side : chart_sides(c)) {
        if (side.normal.i < 0 && side.normal.j < 0) chain.emplace_back(side.from, side.to);
    }
    contract(c, chain, Point2{});

    GluedComplex g;
    g.carrier = "affine-plane";
    g.cells = reflected_cells(c.polygon);
    g.curve = c.global_curve();
    g.components = component_count(g.curve);
    g.unbounded_branches = free_ends(g.curve);
    return g;
}

GluedComplex projective_topology(const Chart& input) {
    Chart c = adjoin_side(adjoin_side(adjoin_side(input, {0, -1}), {-1, 0}), {1, 1});
    c = to_axes(c);
    std::int64_t size = 0;
    for (const auto& v : c.polygon.vertices()) size = std::max(size, v.i + v.j);

    std::vector<std::pair<LatticePoint, LatticePoint>> origin_chain, x_chain, y_chain;
    for (const auto& side : chart_sides(c)) {
        if (in_open_cone(side.normal, {-1, 0}, {0, -1})) origin_chain.emplace_back(side.from, side.to);
        if (in_open_cone(side.normal, {0, -1}, {1, 1})) x_chain.emplace_back(side.from, side.to);
        if (in_open_cone(side.normal, {1, 1}, {-1, 0})) y_chain.emplace_back(side.from, side.to);
    }
    contract(c, origin_chain, Point2{});
    contract(c, x_chain, Point2{Rational(size), Rational(0)});
    contract(c, y_chain, Point2{Rational(0), Rational(size)});

    GluedComplex g;
    g.carrier = "projective-plane";
    g.cells = reflected_cells(c.polygon);
    g.curve = c.global_curve();
    g.radius = Rational(size);
    try {
        ProjectiveComplex pc(g.curve, g.radius);
        g.components = pc.component_count();
        if (pc.is_closed_manifold()) {
            g.code = isotopy_code(pc);
        } else {
            g.note = "singular closure";
        }
    } catch (const std::invalid_argument& e) {
        g.note = e.what();
    }
    return g;
}

Chart patchwork_charts(const std::vector<Chart>& charts) {
    if (charts.empty()) throw std::invalid_argument("no charts to patchwork");
    if (charts.size() == 1) return charts.front();
    std::int64_t area = 0;
    std::vector<LatticePoint> all;
    for (const auto& c : charts) {
        if (c.polygon.size() < 3) throw std::invalid_argument("patchworking needs two-dimensional charts");
        area += c.polygon.doubled_area();
        all.insert(all.end(), c.polygon.vertices().begin(), c.polygon.vertices().end());
    }
    for (std::size_t a = 0; a < charts.size(); ++a) {
        for (std::size_t b = a + 1; b < charts.size(); ++b) {
            if (!interiors_disjoint(charts[a].polygon, charts[b].polygon)) {
                throw std::invalid_argument("chart interiors overlap");
            }
        }
    }
    ConvexPolygon hull(all);
    if (hull.doubled_area() != area) throw std::invalid_argument("charts do not tile a convex polygon");

    auto trace = [](const Chart& c, int q, const Point2& u, const Point2& w) {
        std::set<Point2> pts;
        for (const auto& s : c.curve) {
            if (s.quadrant != q) continue;
            for (const auto* p : {&s.a, &s.b}) {
                if (on_segment(*p, u, w)) pts.insert(*p);
            }
        }
        return pts;
    };
    for (std::size_t a = 0; a < charts.size(); ++a) {
        for (std::size_t b = a + 1; b < charts.size(); ++b) {
            for (const auto& [s0, s1] : charts[a].polygon.sides()) {
                for (const auto& [r0, r1] : charts[b].polygon.sides()) {
                    if (doubled_area(s0, s1, r0) != 0 || doubled_area(s0, s1, r1) != 0) continue;
                    // overlap of two collinear sides
                    std::vector<LatticePoint> ends{s0, s1, r0, r1};
                    LatticePoint dir = s1 - s0;
                    std::sort(ends.begin(), ends.end(),
                              [&](LatticePoint x, LatticePoint y) { return dot(dir, x) < dot(dir, y); });
                    LatticePoint u = ends[1], w = ends[2];
                    bool inside = on_segment(to_point(u), to_point(s0), to_point(s1)) &&
                                  on_segment(to_point(u), to_point(r0), to_point(r1)) &&
                                  on_segment(to_point(w), to_point(s0), to_point(s1)) &&
                                  on_segment(to_point(w), to_point(r0), to_point(r1));
                    if (!inside || u == w) continue;
                    for (int q = 0; q < 4; ++q) {
                        if (trace(charts[a], q, to_point(u), to_point(w)) !=
                            trace(charts[b], q, to_point(u), to_point(w))) {
                            throw std::invalid_argument("incompatible charts");
                        }
                    }
                }
            }
        }
    }
    Chart out;
    out.polygon = hull;
    std::set<std::tuple<int, Point2, Point2>> seen;
    for (const auto& c : charts) {
        for (const auto& s : c.curve) {
            Point2 lo = s.a < s.b ? s.a : s.b, hi = s.a < s.b ? s.b : s.a;
            if (seen.emplace(s.quadrant, lo, hi).second) out.curve.push_back(s);
        }
    }
    return out;
}

std::vector<ChartSegment> canonical_trace(const Chart& c) {
    std::vector<ChartSegment> out;
    for (auto s : c.curve) {
        if (s.b < s.a) std::swap(s.a, s.b);
        out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](const ChartSegment& x, const ChartSegment& y) {
        return std::tie(x.quadrant, x.a, x.b) < std::tie(y.quadrant, y.a, y.b);
    });
    return out;
}

}  // namespace patchwork
