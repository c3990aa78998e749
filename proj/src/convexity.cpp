#include "patchwork/convexity.hpp"

#include "patchwork/simplex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace patchwork {

std::int64_t HeightFunction::at(LatticePoint p) const {
    auto it = heights_.find(p);
    if (it == heights_.end()) throw std::invalid_argument("height missing at " + to_string(p));
    return it->second;
}

ConvexPartition as_partition(const SignedTriangulation& t) {
    ConvexPartition p;
    p.domain = t.domain;
    for (const auto& tri : t.triangles) {
        p.cells.emplace_back(std::vector<LatticePoint>{t.vertices.at(tri[0]), t.vertices.at(tri[1]),
                                                       t.vertices.at(tri[2])});
    }
    return p;
}

namespace {

// A segment shared with positive length by two cells, and a vertex of the
// second cell off its supporting line.
struct Fold {
    std::size_t a;
    std::size_t b;
    LatticePoint p;
    LatticePoint q;
    LatticePoint off;
};

bool overlap_positive(LatticePoint p, LatticePoint q, LatticePoint r, LatticePoint s) {
    if (doubled_area(p, q, r) != 0 || doubled_area(p, q, s) != 0) return false;
    LatticePoint d = q - p;
    std::int64_t lo1 = 0, hi1 = dot(d, d);
    std::int64_t x = dot(d, r - p), y = dot(d, s - p);
    std::int64_t lo2 = std::min(x, y), hi2 = std::max(x, y);
    return std::min(hi1, hi2) > std::max(lo1, lo2);
}

std::vector<Fold> folds(const ConvexPartition& p) {
    std::vector<Fold> out;
    for (std::size_t a = 0; a < p.cells.size(); ++a) {
        for (std::size_t b = a + 1; b < p.cells.size(); ++b) {
            for (const auto& [s0, s1] : p.cells[a].sides()) {
                bool found = false;
                for (const auto& [r0, r1] : p.cells[b].sides()) {
                    if (!overlap_positive(s0, s1, r0, r1)) continue;
                    for (const auto& v : p.cells[b].vertices()) {
                        if (doubled_area(s0, s1, v) != 0) {
                            out.push_back({a, b, s0, s1, v});
                            break;
                        }
                    }
                    found = true;
                    break;
                }
                if (found) break;
            }
        }
    }
    return out;
}

std::vector<LatticePoint> nodes_of(const ConvexPartition& p) {
    std::set<LatticePoint> s;
    for (const auto& c : p.cells) s.insert(c.vertices().begin(), c.vertices().end());
    return {s.begin(), s.end()};
}

// Row D*h_v - (D_a h_a + D_b h_b + D_c h_c) for the basis (a,b,c) of a cell.
struct Row {
    std::vector<std::pair<LatticePoint, std::int64_t>> terms;
    std::string label;
};

Row interpolation_row(const ConvexPolygon& cell, LatticePoint v) {
    const auto& vs = cell.vertices();
    LatticePoint a = vs[0], b = vs[1], c = vs[2];
    Row r;
    r.terms = {{v, doubled_area(a, b, c)},
               {a, -doubled_area(v, b, c)},
               {b, -doubled_area(a, v, c)},
               {c, -doubled_area(a, b, v)}};
    return r;
}

template <class Heights>
BigRational evaluate_row(const Row& r, const Heights& h) {
    BigRational s = 0;
    for (const auto& [pt, coef] : r.terms) s += BigRational(coef) * h(pt);
    return s;
}

struct System {
    std::vector<LatticePoint> nodes;
    std::vector<Row> equalities;  // == 0
    std::vector<Row> folds;       // >= 1
};

System build_system(const ConvexPartition& p) {
    System s;
    s.nodes = nodes_of(p);
    for (std::size_t k = 0; k < p.cells.size(); ++k) {
        const auto& cell = p.cells[k];
        const auto& vs = cell.vertices();
        for (const auto& v : s.nodes) {
            if (v == vs[0] || v == vs[1] || v == vs[2] || !cell.contains(v)) continue;
            Row r = interpolation_row(cell, v);
            r.label = "affine on cell " + std::to_string(k) + " at " + to_string(v);
            s.equalities.push_back(std::move(r));
        }
    }
    for (const auto& f : folds(p)) {
        Row r = interpolation_row(p.cells[f.a], f.off);
        r.label = "fold between cells " + std::to_string(f.a) + " and " + std::to_string(f.b) + " at " +
                  to_string(f.off);
        s.folds.push_back(std::move(r));
    }
    return s;
}

void require_valid(const ConvexPartition& p) {
    auto v = partition_violations(p);
    if (!v.empty()) throw std::invalid_argument("invalid input: " + v.front());
}

BigInt lcm_big(const BigInt& a, const BigInt& b) { return a / boost::multiprecision::gcd(a, b) * b; }

InfeasibilityCertificate farkas(const System& s) {
    // y_eq = u - w (u,w >= 0), y_fold >= 0; sum over rows of y * row == 0, sum y_fold == 1
    const std::size_t ne = s.equalities.size(), nf = s.folds.size();
    const std::size_t nvars = 2 * ne + nf;
    std::map<LatticePoint, std::size_t> col;
    for (std::size_t k = 0; k < s.nodes.size(); ++k) col[s.nodes[k]] = k;
    std::vector<std::vector<LinearTerm>> per_node(s.nodes.size());
    for (std::size_t e = 0; e < ne; ++e) {
        for (const auto& [pt, c] : s.equalities[e].terms) {
            if (c == 0) continue;
            per_node[col[pt]].push_back({2 * e, BigRational(c)});
            per_node[col[pt]].push_back({2 * e + 1, BigRational(-c)});
        }
    }
    for (std::size_t f = 0; f < nf; ++f) {
        for (const auto& [pt, c] : s.folds[f].terms) {
            if (c != 0) per_node[col[pt]].push_back({2 * ne + f, BigRational(c)});
        }
    }
    LinearProgram lp(nvars);
    for (auto& terms : per_node) lp.add({std::move(terms), Relation::Equal, BigRational(0)});
    std::vector<LinearTerm> normal;
    for (std::size_t f = 0; f < nf; ++f) normal.push_back({2 * ne + f, BigRational(1)});
    lp.add({normal, Relation::Equal, BigRational(1)});
    auto sol = lp.solve();

    InfeasibilityCertificate cert;
    if (sol.status != LpStatus::Optimal) return cert;
    std::map<LatticePoint, BigRational> combo;
    BigRational fold_sum = 0;
    bool nonneg = true;
    for (std::size_t e = 0; e < ne; ++e) {
        BigRational y = sol.x[2 * e] - sol.x[2 * e + 1];
        if (y == 0) continue;
        cert.entries.push_back({s.equalities[e].label, y});
        for (const auto& [pt, c] : s.equalities[e].terms) combo[pt] += y * c;
    }
    for (std::size_t f = 0; f < nf; ++f) {
        const BigRational& y = sol.x[2 * ne + f];
        if (y < 0) nonneg = false;
        fold_sum += y;
        if (y == 0) continue;
        cert.entries.push_back({s.folds[f].label, y});
        for (const auto& [pt, c] : s.folds[f].terms) combo[pt] += y * c;
    }
    bool cancels = std::all_of(combo.begin(), combo.end(), [](const auto& kv) { return kv.second == 0; });
    cert.verified = cancels && nonneg && fold_sum > 0;
    return cert;
}

}  // namespace

std::vector<std::string> partition_violations(const ConvexPartition& p) {
    std::vector<std::string> v;
    if (p.domain.size() < 3) v.push_back("domain is not a polygon");
    if (p.cells.empty()) v.push_back("no cells");
    std::int64_t area = 0;
    for (std::size_t k = 0; k < p.cells.size(); ++k) {
        const auto& c = p.cells[k];
        if (c.size() < 3) v.push_back("degenerate cell " + std::to_string(k));
        area += c.doubled_area();
        for (const auto& pt : c.vertices()) {
            if (!p.domain.contains(pt)) {
                v.push_back("cell " + std::to_string(k) + " leaves the domain");
                break;
            }
        }
    }
    for (std::size_t a = 0; a < p.cells.size(); ++a) {
        for (std::size_t b = a + 1; b < p.cells.size(); ++b) {
            if (p.cells[a].size() >= 3 && p.cells[b].size() >= 3 && !interiors_disjoint(p.cells[a], p.cells[b])) {
                v.push_back("cells " + std::to_string(a) + " and " + std::to_string(b) + " overlap");
            }
        }
    }
    if (area != p.domain.doubled_area()) v.push_back("area sum mismatch");
    return v;
}

ConvexifyResult find_convexifying_heights(const ConvexPartition& p) {
    require_valid(p);
    System s = build_system(p);
    std::map<LatticePoint, std::size_t> col;
    for (std::size_t k = 0; k < s.nodes.size(); ++k) col[s.nodes[k]] = k;

    // With the piece on cell 0 fixed to zero, convexity forces every height
    // to be nonnegative, so the simplex's sign restriction loses nothing.
    LinearProgram lp(s.nodes.size());
    auto to_terms = [&](const Row& r) {
        std::vector<LinearTerm> t;
        for (const auto& [pt, c] : r.terms) {
            if (c != 0) t.push_back({col.at(pt), BigRational(c)});
        }
        return t;
    };
    for (const auto& r : s.equalities) lp.add({to_terms(r), Relation::Equal, BigRational(0)});
    for (const auto& r : s.folds) lp.add({to_terms(r), Relation::GreaterEqual, BigRational(1)});
    for (int k = 0; k < 3; ++k) {
        lp.add({{{col.at(p.cells[0].vertices()[static_cast<std::size_t>(k)]), BigRational(1)}},
                Relation::Equal,
                BigRational(0)});
    }
    std::vector<LinearTerm> objective;
    for (std::size_t k = 0; k < s.nodes.size(); ++k) objective.push_back({k, BigRational(1)});
    lp.minimize(objective);
    auto sol = lp.solve();

    if (sol.status != LpStatus::Optimal) {
        Infeasible inf{farkas(s)};
        if (!inf.certificate.verified) throw std::logic_error("LP infeasible but no Farkas certificate found");
        return inf;
    }

    // Scale so every affine piece is integral on all of Z^2.
    BigInt scale = 1;
    auto h = [&](LatticePoint pt) -> const BigRational& { return sol.x[col.at(pt)]; };
    for (const auto& cell : p.cells) {
        const auto& vs = cell.vertices();
        AffineFunction f = interpolate(vs[0], vs[1], vs[2], h(vs[0]), h(vs[1]), h(vs[2]));
        for (const auto* c : {&f.alpha, &f.beta, &f.gamma}) scale = lcm_big(scale, denominator(*c));
    }
    std::vector<BigInt> ints;
    for (const auto& x : sol.x) {
        BigRational v = x * scale;
        ints.push_back(numerator(v) / denominator(v));
    }
    BigInt lo = *std::min_element(ints.begin(), ints.end());
    HeightFunction out;
    for (std::size_t k = 0; k < s.nodes.size(); ++k) {
        BigInt v = ints[k] - lo;
        if (v > BigInt(std::numeric_limits<std::int64_t>::max())) throw std::overflow_error("height exceeds int64");
        out.set(s.nodes[k], v.convert_to<std::int64_t>());
    }
    return out;
}

ConvexifyResult find_convexifying_heights(const SignedTriangulation& t) {
    auto report = validate_triangulation(t);
    if (!report.valid) throw std::invalid_argument("invalid input: " + report.violations.front());
    return find_convexifying_heights(as_partition(t));
}

std::string convexity_violation(const ConvexPartition& p, const HeightFunction& nu) {
    require_valid(p);
    System s = build_system(p);
    for (const auto& v : s.nodes) {
        if (!nu.has(v)) throw std::invalid_argument("height missing at " + to_string(v));
    }
    auto h = [&](LatticePoint pt) { return BigRational(nu.at(pt)); };
    for (const auto& r : s.equalities) {
        if (evaluate_row(r, h) != 0) return "not " + r.label;
    }
    for (const auto& r : s.folds) {
        if (evaluate_row(r, h) <= 0) return "flat or concave " + r.label;
    }
    return {};
}

bool check_convexifies(const ConvexPartition& p, const HeightFunction& nu) {
    return convexity_violation(p, nu).empty();
}

bool check_convexifies(const SignedTriangulation& t, const HeightFunction& nu) {
    auto report = validate_triangulation(t);
    if (!report.valid) throw std::invalid_argument("invalid input: " + report.violations.front());
    return check_convexifies(as_partition(t), nu);
}

AffineFunction interpolate(LatticePoint a, LatticePoint b, LatticePoint c, const BigRational& ha,
                           const BigRational& hb, const BigRational& hc) {
    std::int64_t d = doubled_area(a, b, c);
    if (d == 0) throw std::invalid_argument("interpolation points are collinear");
    // solve alpha*(b-a) + beta*(c-a) differences by Cramer's rule
    LatticePoint u = b - a, w = c - a;
    BigRational du = hb - ha, dw = hc - ha;
    AffineFunction f;
    f.alpha = (du * w.j - dw * u.j) / d;
    f.beta = (dw * u.i - du * w.i) / d;
    f.gamma = ha - f.alpha * a.i - f.beta * a.j;
    return f;
}

ConvexPartition regular_subdivision(const std::vector<LatticePoint>& input, const HeightFunction& nu) {
    std::vector<LatticePoint> pts(input);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    ConvexPartition out;
    out.domain = ConvexPolygon(pts);
    if (out.domain.size() < 3) throw std::invalid_argument("points are collinear");

    std::vector<std::int64_t> h;
    for (const auto& p : pts) h.push_back(nu.at(p));
    const std::size_t n = pts.size();
    std::set<std::vector<std::size_t>> faces;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            for (std::size_t c = b + 1; c < n; ++c) {
                std::int64_t d = doubled_area(pts[a], pts[b], pts[c]);
                if (d == 0) continue;
                std::int64_t sgn = d > 0 ? 1 : -1;
                std::vector<std::size_t> on;
                bool lower = true;
                for (std::size_t k = 0; k < n; ++k) {
                    // sign-normalized D*h_k - (D_a h_a + D_b h_b + D_c h_c)
                    __int128 val = static_cast<__int128>(d) * h[k] -
                                   static_cast<__int128>(doubled_area(pts[k], pts[b], pts[c])) * h[a] -
                                   static_cast<__int128>(doubled_area(pts[a], pts[k], pts[c])) * h[b] -
                                   static_cast<__int128>(doubled_area(pts[a], pts[b], pts[k])) * h[c];
                    val *= sgn;
                    if (val < 0) {
                        lower = false;
                        break;
                    }
                    if (val == 0) on.push_back(k);
                }
                if (lower) faces.insert(on);
            }
        }
    }
    for (const auto& f : faces) {
        std::vector<LatticePoint> fp;
        for (auto k : f) fp.push_back(pts[k]);
        out.cells.emplace_back(fp);
    }
    std::sort(out.cells.begin(), out.cells.end(),
              [](const ConvexPolygon& x, const ConvexPolygon& y) { return x.vertices() < y.vertices(); });
    return out;
}

HeightFunction extend_to_lattice(const ConvexPartition& p, const HeightFunction& nu) {
    HeightFunction out;
    for (const auto& pt : p.domain.lattice_points()) {
        for (const auto& cell : p.cells) {
            if (!cell.contains(pt)) continue;
            const auto& vs = cell.vertices();
            AffineFunction f = interpolate(vs[0], vs[1], vs[2], BigRational(nu.at(vs[0])), BigRational(nu.at(vs[1])),
                                           BigRational(nu.at(vs[2])));
            BigRational v = f(pt);
            if (denominator(v) != 1) throw std::domain_error("height is not integral at " + to_string(pt));
            out.set(pt, numerator(v).convert_to<std::int64_t>());
            break;
        }
    }
    return out;
}

}  // namespace patchwork
