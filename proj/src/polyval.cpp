#include "patchwork/polyval.hpp"

#include "patchwork/charts.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace patchwork {

PatchworkFamily::PatchworkFamily(std::map<LatticePoint, Term> terms) : terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        it = it->second.coefficient == 0 ? terms_.erase(it) : std::next(it);
    }
}

HeightFunction PatchworkFamily::heights() const {
    HeightFunction h;
    for (const auto& [w, term] : terms_) h.set(w, term.height);
    return h;
}

SparsePolynomial PatchworkFamily::coefficients() const {
    SparsePolynomial p;
    for (const auto& [w, term] : terms_) p.add_term(w, term.coefficient);
    return p;
}

namespace {

BigRational power(const BigRational& t, std::int64_t k) {
    BigRational base = k < 0 ? BigRational(1) / t : t;
    BigRational out = 1;
    for (std::int64_t n = k < 0 ? -k : k; n > 0; n >>= 1) {
        if (n & 1) out *= base;
        base *= base;
    }
    return out;
}

std::string monomial_text(LatticePoint w, std::int64_t h) {
    std::string s;
    if (w.i > 0) s += w.i == 1 ? "x" : "x^" + std::to_string(w.i);
    if (w.j > 0) s += w.j == 1 ? "y" : "y^" + std::to_string(w.j);
    if (h != 0) s += h == 1 ? "t" : "t^" + std::to_string(h);
    return s;
}

}  // namespace

SparsePolynomial PatchworkFamily::evaluate(const BigRational& t) const {
    if (t <= 0) throw std::invalid_argument("t must be positive");
    SparsePolynomial p;
    for (const auto& [w, term] : terms_) p.add_term(w, term.coefficient * power(t, term.height));
    return p;
}

PatchworkFamily PatchworkFamily::shifted(std::int64_t k) const {
    auto terms = terms_;
    for (auto& [w, term] : terms) term.height += k;
    return PatchworkFamily(std::move(terms));
}

std::string PatchworkFamily::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<LatticePoint, Term>> order(terms_.begin(), terms_.end());
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        auto da = a.first.i + a.first.j, db = b.first.i + b.first.j;
        if (da != db) return da > db;
        return a.first.i > b.first.i;
    });
    std::string out;
    for (std::size_t k = 0; k < order.size(); ++k) {
        const auto& c = order[k].second.coefficient;
        std::string mono = monomial_text(order[k].first, order[k].second.height);
        BigRational a = c < 0 ? BigRational(-c) : c;
        if (k == 0) {
            out += c < 0 ? "-" : "";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mono.empty()) {
            out += patchwork::to_string(a);
        } else if (a == 1) {
            out += mono;
        } else {
            std::string coef = patchwork::to_string(a);
            out += coef + (coef.find('/') != std::string::npos ? "*" : "") + mono;
        }
    }
    return out;
}

PatchworkFamily patchwork_family(const std::vector<SparsePolynomial>& parts, const HeightFunction& nu) {
    if (parts.empty()) throw std::invalid_argument("no parts");
    ConvexPartition partition;
    std::vector<LatticePoint> all;
    for (const auto& a : parts) {
        ConvexPolygon cell = a.newton_polygon();
        if (cell.size() < 3) throw std::invalid_argument("every part needs a two-dimensional Newton polygon");
        partition.cells.push_back(cell);
        all.insert(all.end(), cell.vertices().begin(), cell.vertices().end());
    }
    partition.domain = ConvexPolygon(all);
    auto problems = partition_violations(partition);
    if (!problems.empty()) throw std::invalid_argument("invalid input: " + problems.front());

    for (std::size_t a = 0; a < parts.size(); ++a) {
        for (std::size_t b = a + 1; b < parts.size(); ++b) {
            if (parts[a].truncation(partition.cells[b]) != parts[b].truncation(partition.cells[a])) {
                throw std::invalid_argument("incompatible parts");
            }
        }
    }
    std::string violation = convexity_violation(partition, nu);
    if (!violation.empty()) throw std::invalid_argument("heights do not convexify: " + violation);

    HeightFunction full = extend_to_lattice(partition, nu);
    std::map<LatticePoint, PatchworkFamily::Term> terms;
    for (const auto& a : parts) {
        for (const auto& [w, c] : a.terms()) {
            if (nu.has(w) && nu.at(w) != full.at(w)) {
                throw std::invalid_argument("height at " + to_string(w) + " is off its cell's affine piece");
            }
            terms[w] = {c, full.at(w)};
        }
    }
    return PatchworkFamily(std::move(terms));
}

PatchworkFamily patchwork_family(const SignedTriangulation& t, const HeightFunction& nu) {
    auto report = validate_triangulation(t);
    if (!report.valid) throw std::invalid_argument("invalid input: " + report.violations.front());
    std::string violation = convexity_violation(as_partition(t), nu);
    if (!violation.empty()) throw std::invalid_argument("heights do not convexify: " + violation);
    std::map<LatticePoint, PatchworkFamily::Term> terms;
    for (std::size_t k = 0; k < t.vertices.size(); ++k) {
        terms[t.vertices[k]] = {BigRational(t.signs[k]), nu.at(t.vertices[k])};
    }
    return PatchworkFamily(std::move(terms));
}

std::array<double, 2> log_map(double x, double y) {
    if (x == 0 || y == 0) throw std::domain_error("log map is undefined on the axes");
    return {std::log(std::abs(x)), std::log(std::abs(y))};
}

std::array<double, 2> quasi_homothety(std::array<double, 2> p, double a, double b, double t) {
    if (t <= 0) throw std::invalid_argument("t must be positive");
    return {p[0] * std::pow(t, a), p[1] * std::pow(t, b)};
}

SparsePolynomial quasi_homothety(const SparsePolynomial& b, const BigRational& a, const BigRational& bw,
                                 const BigRational& t) {
    if (t <= 0) throw std::invalid_argument("t must be positive");
    SparsePolynomial out;
    for (const auto& [w, c] : b.terms()) {
        BigRational e = a * w.i + bw * w.j;
        if (denominator(e) != 1) throw std::invalid_argument("non-integral exponent at " + to_string(w));
        out.add_term(w, c * power(t, numerator(e).convert_to<std::int64_t>()));
    }
    return out;
}

PatchworkFamily quasi_homothety(const PatchworkFamily& f, std::int64_t a, std::int64_t b) {
    auto terms = f.terms();
    for (auto& [w, term] : terms) term.height += a * w.i + b * w.j;
    return PatchworkFamily(std::move(terms));
}

std::array<double, 2> moment_map(std::array<double, 2> y, const std::vector<LatticePoint>& omegas, std::size_t base) {
    if (omegas.empty()) throw std::invalid_argument("no lattice points");
    if (base >= omegas.size()) throw std::out_of_range("base index");
    auto z = log_map(y[0], y[1]);
    const LatticePoint o = omegas[base];
    std::vector<double> e;
    double top = -std::numeric_limits<double>::infinity();
    for (const auto& w : omegas) {
        e.push_back(static_cast<double>(w.i - o.i) * z[0] + static_cast<double>(w.j - o.j) * z[1]);
        top = std::max(top, e.back());
    }
    double s = 0, mx = 0, my = 0;
    for (std::size_t k = 0; k < omegas.size(); ++k) {
        double v = std::exp(e[k] - top);
        s += v;
        mx += v * static_cast<double>(omegas[k].i);
        my += v * static_cast<double>(omegas[k].j);
    }
    return {mx / s, my / s};
}

namespace {

struct SegmentPolynomial {
    LatticePoint start;
    LatticePoint step;
    UnivariatePolynomial q;
};

// a restricted to a collinear support: a = x^start Q(x^step).
SegmentPolynomial along_segment(const SparsePolynomial& a, LatticePoint p0, LatticePoint p1) {
    LatticePoint e = primitive(p1 - p0);
    std::int64_t len = e.i != 0 ? (p1.i - p0.i) / e.i : (p1.j - p0.j) / e.j;
    std::vector<BigRational> c(static_cast<std::size_t>(len + 1));
    for (std::int64_t k = 0; k <= len; ++k) c[static_cast<std::size_t>(k)] = a.coefficient(p0 + LatticePoint{k * e.i, k * e.j});
    return {p0, e, UnivariatePolynomial(c)};
}

}  // namespace

bool completely_nondegenerate(const SparsePolynomial& b) {
    if (b.is_zero()) throw std::invalid_argument("empty polynomial");
    if (b.size() > 3) throw std::invalid_argument("non-degeneracy is only decided for up to three terms");
    if (b.size() < 3) return true;
    auto s = b.support();
    if (doubled_area(s[0], s[1], s[2]) != 0) return true;
    auto poly = b.newton_polygon();
    auto seg = along_segment(b, poly.vertices()[0], poly.vertices()[1]);
    return gcd(seg.q, seg.q.derivative()).degree() < 1;
}

// ---------------------------------------------------------------------------
// Sign grid on the compactified moment image.

namespace {

struct Term {
    double wi;
    double wj;
    double log_weight;
    int sign;  // 0 for padding corners
    std::int64_t i;
    std::int64_t j;
};

double logsumexp_moment(const std::vector<Term>& terms, double z0, double z1, double& mx, double& my, double& hxx,
                        double& hxy, double& hyy) {
    double top = -std::numeric_limits<double>::infinity();
    for (const auto& t : terms) top = std::max(top, t.log_weight + t.wi * z0 + t.wj * z1);
    double s = 0, sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (const auto& t : terms) {
        double v = std::exp(t.log_weight + t.wi * z0 + t.wj * z1 - top);
        s += v;
        sx += v * t.wi;
        sy += v * t.wj;
        sxx += v * t.wi * t.wi;
        sxy += v * t.wi * t.wj;
        syy += v * t.wj * t.wj;
    }
    mx = sx / s;
    my = sy / s;
    hxx = sxx / s - mx * mx;
    hxy = sxy / s - mx * my;
    hyy = syy / s - my * my;
    return top + std::log(s);
}

// z with gradient of log Σ w e^{<ω,z>} equal to p.
void solve_moment(const std::vector<Term>& terms, double px, double py, double& z0, double& z1) {
    double mx, my, hxx, hxy, hyy;
    double f = logsumexp_moment(terms, z0, z1, mx, my, hxx, hxy, hyy) - px * z0 - py * z1;
    for (int iter = 0; iter < 200; ++iter) {
        double gx = mx - px, gy = my - py;
        if (std::abs(gx) < 1e-10 && std::abs(gy) < 1e-10) return;
        double det = hxx * hyy - hxy * hxy;
        double dx, dy;
        if (det > 1e-300) {
            dx = -(hyy * gx - hxy * gy) / det;
            dy = -(-hxy * gx + hxx * gy) / det;
        } else {
            dx = -gx;
            dy = -gy;
        }
        double slope = gx * dx + gy * dy;
        if (slope >= 0) {
            dx = -gx;
            dy = -gy;
            slope = -(gx * gx + gy * gy);
        }
        // the objective is nearly linear far from the solution
        double len = std::hypot(dx, dy);
        if (len > 4.0) {
            dx *= 4.0 / len;
            dy *= 4.0 / len;
            slope *= 4.0 / len;
        }
        double step = 1.0;
        bool moved = false;
        for (int k = 0; k < 40 && !moved; ++k, step *= 0.5) {
            double nx, ny, nhxx, nhxy, nhyy;
            double nf = logsumexp_moment(terms, z0 + step * dx, z1 + step * dy, nx, ny, nhxx, nhxy, nhyy) -
                        px * (z0 + step * dx) - py * (z1 + step * dy);
            if (nf <= f + 1e-4 * step * slope + 1e-14 * std::abs(f)) {
                z0 += step * dx;
                z1 += step * dy;
                f = nf;
                mx = nx;
                my = ny;
                hxx = nhxx;
                hxy = nhxy;
                hyy = nhyy;
                moved = true;
            }
        }
        // no decrease left at double precision
        if (!moved) return;
    }
}

// Neumaier summation of signed weights.  A sum lost in rounding is decided
// at a fixed nearby point, the same for every quadrant, so the quadrant signs
// keep their symmetry.
int signed_sum(const std::vector<Term>& terms, double z0, double z1, int eps, int delta, int depth = 0) {
    double top = -std::numeric_limits<double>::infinity();
    for (const auto& t : terms) {
        if (t.sign != 0) top = std::max(top, t.log_weight + t.wi * z0 + t.wj * z1);
    }
    double sum = 0, comp = 0;
    for (const auto& t : terms) {
        if (t.sign == 0) continue;
        int s = t.sign;
        if (eps < 0 && (t.i % 2 != 0)) s = -s;
        if (delta < 0 && (t.j % 2 != 0)) s = -s;
        double v = s * std::exp(t.log_weight + t.wi * z0 + t.wj * z1 - top);
        double nsum = sum + v;
        comp += std::abs(sum) >= std::abs(v) ? (sum - nsum) + v : (v - nsum) + sum;
        sum = nsum;
    }
    sum += comp;
    if (std::abs(sum) < 1e-12 && depth < 3) return signed_sum(terms, z0 + 1e-6, z1 + 2.3e-6, eps, delta, depth + 1);
    return sum < 0 ? -1 : 1;
}

struct SignGrid {
    int n = 0;
    std::int64_t degree = 0;
    LatticePoint content;
    std::array<std::vector<std::int8_t>, 4> signs;

    std::size_t index(int a, int b) const { return static_cast<std::size_t>(b) * static_cast<std::size_t>(n + 1) + static_cast<std::size_t>(a); }
    int at(int q, int a, int b) const { return signs[static_cast<std::size_t>(q)][index(a, b)]; }
};

// Edge of the degree triangle as a one-parameter family.
struct EdgeTerms {
    std::vector<Term> terms;  // wi holds the exponent along the edge, wj = 0
};

void solve_edge(const std::vector<Term>& terms, double target, double& u) {
    for (int iter = 0; iter < 200; ++iter) {
        double top = -std::numeric_limits<double>::infinity();
        for (const auto& t : terms) top = std::max(top, t.log_weight + t.wi * u);
        double s = 0, sx = 0, sxx = 0;
        for (const auto& t : terms) {
            double v = std::exp(t.log_weight + t.wi * u - top);
            s += v;
            sx += v * t.wi;
            sxx += v * t.wi * t.wi;
        }
        double m = sx / s, var = sxx / s - m * m;
        double g = m - target;
        if (std::abs(g) < 1e-11) return;
        double step = var > 1e-300 ? -g / var : -g;
        step = std::clamp(step, -8.0, 8.0);
        u += step;
    }
}

SignGrid sample_signs(const SparsePolynomial& input, int n) {
    auto [b, content] = input.strip_monomial();
    SignGrid grid;
    grid.n = n;
    grid.content = content;
    grid.degree = b.degree();
    const std::int64_t m = grid.degree;
    for (auto& s : grid.signs) s.assign(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1), 1);
    if (m == 0) return grid;

    std::vector<Term> terms;
    double lowest = std::numeric_limits<double>::infinity();
    for (const auto& [w, c] : b.terms()) {
        double lw = log_abs(c);
        lowest = std::min(lowest, lw);
        terms.push_back({static_cast<double>(w.i), static_cast<double>(w.j), lw, sign(c), w.i, w.j});
    }
    for (LatticePoint corner : {LatticePoint{0, 0}, LatticePoint{m, 0}, LatticePoint{0, m}}) {
        if (b.coefficient(corner) == 0) {
            terms.push_back({static_cast<double>(corner.i), static_cast<double>(corner.j), lowest - std::log(256.0), 0,
                             corner.i, corner.j});
        }
    }
    const double scale = static_cast<double>(m) / n;

    // interior, rows split across threads
    unsigned workers = std::max(1u, std::min(16u, std::thread::hardware_concurrency()));
    if (n < 64) workers = 1;
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                double rz0 = 0, rz1 = 0;
                for (int bb = 1 + static_cast<int>(w); bb < n - 1; bb += static_cast<int>(workers)) {
                    double z0 = rz0, z1 = rz1;
                    for (int a = 1; a + bb < n; ++a) {
                        solve_moment(terms, a * scale, bb * scale, z0, z1);
                        if (a == 1) {
                            rz0 = z0;
                            rz1 = z1;
                        }
                        for (std::size_t q = 0; q < 4; ++q) {
                            grid.signs[q][grid.index(a, bb)] =
                                static_cast<std::int8_t>(signed_sum(terms, z0, z1, kQuadrants[q].eps, kQuadrants[q].delta));
                        }
                    }
                }
            });
        }
    }

    // edges: exponent along the edge and the matching coordinate
    auto edge = [&](auto on_edge, auto along, auto put) {
        std::vector<Term> et;
        for (const auto& t : terms) {
            if (!on_edge(t)) continue;
            Term e = t;
            e.wi = static_cast<double>(along(t));
            e.wj = 0;
            et.push_back(e);
        }
        double u = 0;
        for (int a = 1; a < n; ++a) {
            solve_edge(et, a * scale, u);
            for (std::size_t q = 0; q < 4; ++q) {
                int s = signed_sum(et, u, 0, kQuadrants[q].eps, kQuadrants[q].delta);
                put(q, a, s);
            }
        }
    };
    edge([](const Term& t) { return t.j == 0; }, [](const Term& t) { return t.i; },
         [&](std::size_t q, int a, int s) { grid.signs[q][grid.index(a, 0)] = static_cast<std::int8_t>(s); });
    edge([](const Term& t) { return t.i == 0; }, [](const Term& t) { return t.j; },
         [&](std::size_t q, int a, int s) { grid.signs[q][grid.index(0, a)] = static_cast<std::int8_t>(s); });
    edge([&](const Term& t) { return t.i + t.j == m; }, [](const Term& t) { return t.i; },
         [&](std::size_t q, int a, int s) { grid.signs[q][grid.index(a, n - a)] = static_cast<std::int8_t>(s); });

    const int parity = m % 2 == 0 ? 1 : -1;
    for (std::size_t q = 0; q < 4; ++q) {
        const Quadrant quad = kQuadrants[q];
        BigRational c00 = b.coefficient({0, 0}), cx = b.coefficient({m, 0}), cy = b.coefficient({0, m});
        int s00 = c00 != 0 ? sign(c00) : 1;
        int sx = cx != 0 ? extended_sign(sign(cx), {m, 0}, quad) : (quad.eps > 0 ? 1 : parity);
        int sy = cy != 0 ? extended_sign(sign(cy), {0, m}, quad) : (quad.delta > 0 ? 1 : parity);
        grid.signs[q][grid.index(0, 0)] = static_cast<std::int8_t>(s00);
        grid.signs[q][grid.index(n, 0)] = static_cast<std::int8_t>(sx);
        grid.signs[q][grid.index(0, n)] = static_cast<std::int8_t>(sy);
    }
    return grid;
}

PLCurve grid_curve(const SignGrid& g) {
    PLCurve out;
    const int n = g.n;
    for (int q = 0; q < 4; ++q) {
        const Quadrant quad = kQuadrants[static_cast<std::size_t>(q)];
        auto emit = [&](std::array<std::array<int, 2>, 3> v) {
            std::array<int, 3> s{};
            for (int k = 0; k < 3; ++k) s[static_cast<std::size_t>(k)] = g.at(q, v[static_cast<std::size_t>(k)][0], v[static_cast<std::size_t>(k)][1]);
            if (s[0] == s[1] && s[1] == s[2]) return;
            std::vector<Point2> mids;
            for (std::size_t e = 0; e < 3; ++e) {
                if (s[e] == s[(e + 1) % 3]) continue;
                const auto& p = v[e];
                const auto& r = v[(e + 1) % 3];
                Point2 mid{Rational(p[0] + r[0], 2), Rational(p[1] + r[1], 2)};
                mids.push_back(reflect(mid, quad));
            }
            out.segments.push_back({mids[0], mids[1]});
        };
        for (int b = 0; b < n; ++b) {
            for (int a = 0; a + b < n; ++a) {
                emit({{{a, b}, {a + 1, b}, {a, b + 1}}});
                if (a + b + 2 <= n) emit({{{a + 1, b}, {a + 1, b + 1}, {a, b + 1}}});
            }
        }
    }
    return out;
}

NumericIsotopy assemble(const SignGrid& g) {
    NumericIsotopy out;
    out.resolution = g.n;
    out.degree = g.degree;
    out.curve = grid_curve(g);
    out.quadrant_components = quadrant_components(out.curve);
    auto counts = affine_counts(out.curve, Rational(g.n));
    out.affine_components = counts.components;
    out.unbounded_ends = counts.unbounded_ends;
    if (g.degree == 0) {
        out.code = IsotopyCode{};
        return out;
    }
    ProjectiveComplex pc(out.curve, Rational(g.n));
    out.code = isotopy_code(pc);
    return out;
}

// Fraction of grid points whose numeric sign disagrees with the sign of the
// T-curve region around them.
double mismatch_fraction(const SignGrid& g, const SignedTriangulation& t) {
    const double scale = static_cast<double>(g.degree) / g.n;
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(g.n + 1) * static_cast<std::size_t>(g.n + 1), 0);
    std::size_t counted = 0, wrong = 0;
    for (const auto& tri : t.triangles) {
        std::array<LatticePoint, 3> v;
        std::array<int, 3> sigma{};
        for (std::size_t k = 0; k < 3; ++k) {
            v[k] = t.vertices[static_cast<std::size_t>(tri[k])] - g.content;
            sigma[k] = t.signs[static_cast<std::size_t>(tri[k])];
        }
        double x0 = static_cast<double>(v[0].i), y0 = static_cast<double>(v[0].j);
        double ax = static_cast<double>(v[1].i) - x0, ay = static_cast<double>(v[1].j) - y0;
        double bx = static_cast<double>(v[2].i) - x0, by = static_cast<double>(v[2].j) - y0;
        double det = ax * by - ay * bx;
        double lo_x = std::min({v[0].i, v[1].i, v[2].i}) / scale, hi_x = std::max({v[0].i, v[1].i, v[2].i}) / scale;
        double lo_y = std::min({v[0].j, v[1].j, v[2].j}) / scale, hi_y = std::max({v[0].j, v[1].j, v[2].j}) / scale;
        for (int b = std::max(1, static_cast<int>(std::ceil(lo_y))); b <= std::min(g.n - 1, static_cast<int>(hi_y)); ++b) {
            for (int a = std::max(1, static_cast<int>(std::ceil(lo_x))); a + b < g.n && a <= static_cast<int>(hi_x); ++a) {
                if (seen[g.index(a, b)]) continue;
                double px = a * scale - x0, py = b * scale - y0;
                double l1 = (px * by - py * bx) / det;
                double l2 = (ax * py - ay * px) / det;
                double l0 = 1 - l1 - l2;
                if (l0 < -1e-12 || l1 < -1e-12 || l2 < -1e-12) continue;
                seen[g.index(a, b)] = 1;
                std::array<double, 3> lambda{l0, l1, l2};
                for (std::size_t q = 0; q < 4; ++q) {
                    std::array<int, 3> s{};
                    for (std::size_t k = 0; k < 3; ++k) s[k] = extended_sign(sigma[k], v[k] + g.content, kQuadrants[q]);
                    int expected;
                    if (s[0] == s[1] && s[1] == s[2]) {
                        expected = s[0];
                    } else {
                        std::size_t odd = (s[0] == s[1]) ? 2 : (s[0] == s[2] ? 1 : 0);
                        if (std::abs(lambda[odd] - 0.5) < 0.05) continue;
                        expected = lambda[odd] > 0.5 ? s[odd] : -s[odd];
                    }
                    ++counted;
                    if (g.at(static_cast<int>(q), a, b) != expected) ++wrong;
                }
            }
        }
    }
    return counted == 0 ? 0.0 : static_cast<double>(wrong) / static_cast<double>(counted);
}

}  // namespace

NumericIsotopy numeric_isotopy(const SparsePolynomial& b, int resolution) {
    if (resolution < 8) throw std::invalid_argument("resolution must be at least 8");
    if (b.is_zero()) throw std::invalid_argument("empty polynomial");
    return assemble(sample_signs(b, resolution));
}

std::vector<BigRational> halving_schedule(int first, int steps) {
    if (first < 0 || steps < 1) throw std::invalid_argument("schedule needs first >= 0 and steps >= 1");
    std::vector<BigRational> out;
    for (int k = first; k < first + steps; ++k) out.push_back(power(BigRational(2), -k));
    return out;
}

std::optional<IsotopyCode> combinatorial_code(const SignedTriangulation& t) {
    SymmetricComplex sc = symmetrize(t);
    const auto& vs = t.domain.vertices();
    std::int64_t m = 0;
    for (const auto& v : vs) m = std::max(m, v.i + v.j);
    if (t.domain == degree_triangle(m)) {
        return isotopy_code(projective_quotient(sc, midline_curve(sc)));
    }
    return projective_topology(t_curve_chart(sc)).code;
}

NumericReport verify_patchwork(const SignedTriangulation& t, const HeightFunction& nu, const VerifyOptions& opts) {
    return verify_patchwork(patchwork_family(t, nu), t, opts);
}

NumericReport verify_patchwork(const PatchworkFamily& f, const SignedTriangulation& t, const VerifyOptions& opts) {
    auto report = validate_triangulation(t);
    if (!report.valid) throw std::invalid_argument("invalid input: " + report.violations.front());
    if (opts.resolution < 8) throw std::invalid_argument("resolution must be at least 8");
    for (std::size_t k = 0; k < t.vertices.size(); ++k) {
        auto it = f.terms().find(t.vertices[k]);
        if (it == f.terms().end() || sign(it->second.coefficient) != t.signs[k]) {
            throw std::invalid_argument("family does not match the sign at " + to_string(t.vertices[k]));
        }
    }
    HeightFunction nu = f.heights();
    std::string violation = convexity_violation(as_partition(t), nu);
    if (!violation.empty()) throw std::invalid_argument("heights do not convexify: " + violation);

    NumericReport out;
    out.resolution = opts.resolution;
    out.combinatorial = combinatorial_code(t);
    auto schedule = opts.schedule.empty() ? halving_schedule(1, 12) : opts.schedule;
    std::optional<std::string> previous;
    for (const auto& tv : schedule) {
        SignGrid g = sample_signs(f.evaluate(tv), opts.resolution);
        NumericIsotopy iso = assemble(g);
        NumericStep step{tv, std::nullopt, iso.code ? iso.code->components() : 0};
        if (iso.code) step.code = iso.code->encoding;
        out.steps.push_back(step);
        out.t = tv;
        out.quadrant_components = iso.quadrant_components;
        out.affine_components = iso.affine_components;
        out.code = iso.code;
        out.mismatch_fraction = mismatch_fraction(g, t);
        bool matches = out.combinatorial && step.code && *step.code == out.combinatorial->encoding;
        out.stabilized = matches && previous == step.code;
        if (out.stabilized && opts.stop_when_stable) break;
        previous = step.code;
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

struct Asymptote {
    double e1;
    double e2;
    double offset;  // e1 u + e2 v = offset
    int eps_sign;   // required sign of ε^e1 δ^e2
};

double refine_root(const UnivariatePolynomial& p, double lo, double hi) {
    auto value = [&](double s) {
        double v = 0;
        const auto& c = p.coefficients();
        for (std::size_t k = c.size(); k-- > 0;) v = v * s + c[k].convert_to<double>();
        return v;
    };
    double flo = value(lo);
    for (int k = 0; k < 200; ++k) {
        double mid = 0.5 * (lo + hi);
        double fm = value(mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<Asymptote> asymptotes(const SparsePolynomial& a) {
    std::vector<Asymptote> out;
    ConvexPolygon poly = a.newton_polygon();
    if (poly.size() < 2) return out;
    for (const auto& [p0, p1] : poly.sides()) {
        auto seg = along_segment(a, p0, p1);
        UnivariatePolynomial sq = seg.q.divmod(gcd(seg.q, seg.q.derivative())).first;
        BigRational bound = root_bound(sq);
        for (int side : {1, -1}) {
            UnivariatePolynomial r = side > 0 ? sq : sq.reflected();
            for (const auto& [lo, hi] : isolate_roots(r, BigRational(0), bound)) {
                double s = refine_root(r, lo.convert_to<double>(), hi.convert_to<double>());
                out.push_back({static_cast<double>(seg.step.i), static_cast<double>(seg.step.j), std::log(s), side});
            }
        }
    }
    return out;
}

int log_sign(const SparsePolynomial& a, double u, double v, int eps, int delta) {
    double top = -std::numeric_limits<double>::infinity();
    for (const auto& [w, c] : a.terms()) top = std::max(top, log_abs(c) + w.i * u + w.j * v);
    double sum = 0;
    for (const auto& [w, c] : a.terms()) {
        int s = extended_sign(sign(c), w, {eps, delta});
        sum += s * std::exp(log_abs(c) + w.i * u + w.j * v - top);
    }
    return sum < 0 ? -1 : 1;
}

}  // namespace

std::vector<double> asymptote_distances(const SparsePolynomial& a, const std::vector<double>& radii) {
    if (a.is_zero()) throw std::invalid_argument("empty polynomial");
    auto lines = asymptotes(a);
    std::vector<double> out;
    constexpr int samples = 8192;
    const double two_pi = 2.0 * std::acos(-1.0);
    for (double r : radii) {
        double worst = 0;
        for (const auto& quad : kQuadrants) {
            auto f = [&](double th) { return log_sign(a, r * std::cos(th), r * std::sin(th), quad.eps, quad.delta); };
            for (int k = 0; k < samples; ++k) {
                double lo = two_pi * k / samples, hi = two_pi * (k + 1) / samples;
                int flo = f(lo);
                if (flo == f(hi)) continue;
                for (int it = 0; it < 60; ++it) {
                    double mid = 0.5 * (lo + hi);
                    if (f(mid) == flo) {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                double th = 0.5 * (lo + hi);
                double u = r * std::cos(th), v = r * std::sin(th);
                double best = std::numeric_limits<double>::infinity();
                for (const auto& l : lines) {
                    int s = 1;
                    if (quad.eps < 0 && static_cast<std::int64_t>(l.e1) % 2 != 0) s = -s;
                    if (quad.delta < 0 && static_cast<std::int64_t>(l.e2) % 2 != 0) s = -s;
                    if (s != l.eps_sign) continue;
                    best = std::min(best, std::abs(l.e1 * u + l.e2 * v - l.offset) / std::hypot(l.e1, l.e2));
                }
                worst = std::max(worst, best);
            }
        }
        out.push_back(worst);
    }
    return out;
}

}  // namespace patchwork
