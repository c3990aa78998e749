// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any failure.

#include "generators.hpp"

#include "patchwork/charts.hpp"
#include "patchwork/convexity.hpp"
#include "patchwork/polyval.hpp"
#include "patchwork/presets.hpp"
#include "patchwork/topology.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

using namespace patchwork;
using patchwork::testing::Rng;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    std::string name;
    double limit_seconds;  // 0 for no limit
    std::function<Outcome()> run;
};

std::string fmt(double x) {
    std::ostringstream s;
    s.precision(4);
    s << x;
    return s.str();
}

Outcome example_family() {
    PatchworkFamily f = patchwork_family(example_parts(), example_heights());
    PatchworkFamily expected({{{3, 0}, {BigRational(8), 0}},
                              {{2, 0}, {BigRational(-1), 0}},
                              {{0, 2}, {BigRational(4), 0}},
                              {{0, 0}, {BigRational(1), 2}}});
    bool ok = f == expected && f.to_string() == "8x^3 - x^2 + 4y^2 + t^2";
    return {ok, f.to_string()};
}

Outcome pinwheel() {
    auto result = find_convexifying_heights(pinwheel_partition());
    auto* inf = std::get_if<Infeasible>(&result);
    if (!inf) return {false, "heights found"};
    const auto& cert = inf->certificate;
    return {cert.verified && !cert.entries.empty(),
            "infeasible, certificate with " + std::to_string(cert.entries.size()) + " multipliers" +
                (cert.verified ? ", verified" : ", NOT verified")};
}

Outcome oracle_equivalence() {
    Rng rng(20240501);
    VerifyOptions opts;
    opts.schedule = halving_schedule(1, 10);
    opts.resolution = 512;
    int agree = 0, unstable = 0, wrong = 0;
    std::string notes;
    for (int k = 0; k < 50; ++k) {
        std::int64_t m = 2 + k % 3;
        auto sample = patchwork::testing::random_convex_triangulation(m, rng);
        NumericReport r = verify_patchwork(sample.triangulation, sample.heights, opts);
        if (!r.stabilized) {
            ++unstable;
            notes += " #" + std::to_string(k) + "(m=" + std::to_string(m) + ") unstable;";
        } else if (r.code && r.combinatorial && *r.code == *r.combinatorial) {
            ++agree;
        } else {
            ++wrong;
            notes += " #" + std::to_string(k) + " wrong;";
        }
    }
    return {agree >= 48 && wrong == 0,
            std::to_string(agree) + "/50 agree, " + std::to_string(unstable) + " not stabilized, " +
                std::to_string(wrong) + " wrong" + notes};
}

Outcome harnack() {
    Preset p = make_preset("harnack", 6);
    auto code = combinatorial_code(p.triangulation);
    if (!code) return {false, "no combinatorial code"};
    bool comb = code->encoding == "9 ∪ 1⟨1⟩" && code->components() == 11 && code->components() <= harnack_bound(6);
    VerifyOptions opts;
    opts.resolution = 2048;
    NumericReport r = verify_patchwork(p.triangulation, p.heights, opts);
    bool numeric = r.stabilized && r.code && r.code->encoding == code->encoding;
    return {comb && numeric, code->encoding + ", " + std::to_string(code->components()) + " components; grid 2048 " +
                                 (r.stabilized ? "stabilized at t=" + to_string(r.t) : std::string("not stabilized")) +
                                 " to " + (r.code ? r.code->encoding : std::string("none"))};
}

Outcome gudkov() {
    Preset p = make_preset("gudkov");
    auto code = combinatorial_code(p.triangulation);
    if (!code) return {false, "no combinatorial code"};
    std::size_t outer_empty = 0, nests = 0;
    for (const auto& o : code->ovals) {
        bool empty_children = std::all_of(o.children.begin(), o.children.end(),
                                          [](const Oval& c) { return c.children.empty(); });
        if (o.children.empty()) ++outer_empty;
        else if (o.children.size() == 5 && empty_children) ++nests;
    }
    bool ok = code->components() == 11 && code->one_sided == 0 && code->ovals.size() == 6 && outer_empty == 5 &&
              nests == 1 && code->encoding == "5 ∪ 1⟨5⟩" && code->components() <= harnack_bound(6) &&
              std::holds_alternative<HeightFunction>(find_convexifying_heights(p.triangulation));
    if (!ok) return {false, code->encoding + ", " + std::to_string(code->components()) + " components"};
    // optional numeric confirmation
    VerifyOptions opts;
    opts.resolution = 2048;
    NumericReport r = verify_patchwork(p.triangulation, p.heights, opts);
    std::string numeric = r.stabilized ? "grid 2048 stabilized at t=" + to_string(r.t) + " to " + r.code->encoding
                                       : std::string("grid 2048 did not stabilize (optional)");
    return {ok, code->encoding + ", " + std::to_string(code->components()) + " components, convex; " + numeric};
}

Outcome property_suite() {
    Rng rng(77);
    // non-convex samples come from short walks around one rejected triangulation per degree
    std::map<std::int64_t, SignedTriangulation> walkers;
    for (std::int64_t m = 4; m <= 6; ++m) walkers[m] = patchwork::testing::random_nonconvex_triangulation(m, rng);
    int convex = 0, nonconvex = 0, bad = 0;
    std::string notes;
    for (int k = 0; k < 500; ++k) {
        std::int64_t m = 2 + k % 5;
        SignedTriangulation t;
        if (m >= 4 && k % 2 == 1) {
            t = walkers[m];
            patchwork::testing::flip_random_edge(t, rng);
            patchwork::testing::randomize_signs(t, rng);
        } else {
            int flips = static_cast<int>(rng() % static_cast<std::uint64_t>(6 * m * m + 1));
            t = patchwork::testing::random_triangulation(m, flips, rng);
        }
        bool is_convex = patchwork::testing::is_convex(t);
        (is_convex ? convex : nonconvex)++;
        if (!is_convex && m >= 4) walkers[m] = t;
        SymmetricComplex sc = symmetrize(t);
        PLCurve l = midline_curve(sc);
        ProjectiveComplex pc = projective_quotient(sc, l);
        if (!pc.is_closed_manifold()) {
            ++bad;
            notes += " #" + std::to_string(k) + " not closed;";
            continue;
        }
        IsotopyCode code = isotopy_code(pc);
        if (code.one_sided > 1 || (is_convex && code.one_sided != m % 2)) {
            ++bad;
            notes += " #" + std::to_string(k) + " one-sided " + std::to_string(code.one_sided) + ";";
        }
    }
    return {bad == 0 && nonconvex > 0, "500 curves (" + std::to_string(convex) + " convex, " +
                                           std::to_string(nonconvex) + " non-convex), " + std::to_string(bad) +
                                           " violations" + notes};
}

bool same_cells(const ConvexPartition& a, const ConvexPartition& b) {
    auto key = [](const ConvexPartition& p) {
        std::vector<std::vector<LatticePoint>> cells;
        for (const auto& c : p.cells) cells.push_back(c.vertices());
        std::sort(cells.begin(), cells.end());
        return cells;
    };
    return a.domain == b.domain && key(a) == key(b);
}

Outcome convexifier_round_trip() {
    Rng rng(4242);
    int ok = 0;
    for (int k = 0; k < 100; ++k) {
        std::int64_t m = 2 + k % 5;
        auto sample = patchwork::testing::random_convex_triangulation(m, rng);
        ConvexPartition back = regular_subdivision(sample.triangulation.vertices, sample.heights);
        if (same_cells(back, as_partition(sample.triangulation))) ++ok;
    }
    return {ok == 100, std::to_string(ok) + "/100 exact"};
}

Outcome gauge_identity() {
    Rng rng(99);
    int ok = 0;
    for (int k = 0; k < 20; ++k) {
        std::int64_t m = 2 + k % 4;
        auto sample = patchwork::testing::random_convex_triangulation(m, rng);
        const auto& t = sample.triangulation;
        std::map<LatticePoint, BigRational> coefficient;
        for (std::size_t v = 0; v < t.vertices.size(); ++v) {
            coefficient[t.vertices[v]] = BigRational(static_cast<long>(1 + rng() % 7), static_cast<long>(1 + rng() % 3)) * t.signs[v];
        }
        std::vector<SparsePolynomial> parts;
        for (const auto& tri : t.triangles) {
            SparsePolynomial a;
            for (int v : tri) a.add_term(t.vertices[v], coefficient[t.vertices[v]]);
            parts.push_back(a);
        }
        auto draw = [&] { return static_cast<std::int64_t>(rng() % 11) - 5; };
        std::int64_t alpha = draw(), beta = draw(), gamma = draw();
        HeightFunction shifted;
        for (const auto& [w, h] : sample.heights.values()) shifted.set(w, h - (alpha * w.i + beta * w.j + gamma));
        PatchworkFamily b = patchwork_family(parts, sample.heights);
        PatchworkFamily b2 = patchwork_family(parts, shifted);
        bool symbolic = b2 == quasi_homothety(b, -alpha, -beta).shifted(-gamma);
        BigRational tv(static_cast<long>(1 + rng() % 5), static_cast<long>(6 + rng() % 10));
        SparsePolynomial lhs = b2.evaluate(tv);
        SparsePolynomial rhs = quasi_homothety(b.evaluate(tv), BigRational(-alpha), BigRational(-beta), tv);
        BigRational scale = 1;
        for (std::int64_t q = 0; q < (gamma < 0 ? -gamma : gamma); ++q) scale *= tv;
        rhs *= gamma > 0 ? 1 / scale : scale;
        if (symbolic && lhs == rhs) ++ok;
    }
    return {ok == 20, std::to_string(ok) + "/20 exact identities"};
}

Outcome asymptotes() {
    auto d = asymptote_distances(SparsePolynomial::parse("8x^3 - x^2 + 4y^2"), {5, 10, 20});
    bool ok = d.size() == 3 && d[0] > d[1] && d[1] > d[2] && d[2] < 0.05;
    return {ok, "R=5: " + fmt(d[0]) + ", R=10: " + fmt(d[1]) + ", R=20: " + fmt(d[2])};
}

Outcome chart_consistency() {
    Rng rng(31337);
    int ok = 0;
    std::string notes;
    for (int k = 0; k < 20; ++k) {
        SparsePolynomial a = patchwork::testing::random_smooth_trinomial(rng);
        GluedComplex g = projective_topology(trinomial_chart(a));
        NumericIsotopy n = numeric_isotopy(a, 512);
        if (g.code && n.code && *g.code == *n.code) {
            ++ok;
        } else {
            notes += " [" + a.to_string() + ": chart " + (g.code ? g.code->encoding : "none") + ", numeric " +
                     (n.code ? n.code->encoding : "none") + "]";
        }
    }
    return {ok == 20, std::to_string(ok) + "/20 codes agree" + notes};
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"example family 8x^3 - x^2 + 4y^2 + t^2", 1, example_family},
        {"pinwheel partition infeasible with certificate", 1, pinwheel},
        {"numeric oracle on 50 convex triangulations, degrees 2-4", 600, oracle_equivalence},
        {"harnack sextic 9 ∪ 1⟨1⟩, numeric at grid 2048", 300, harnack},
        {"gudkov sextic 5 ∪ 1⟨5⟩", 0, gudkov},
        {"property suite on 500 signed triangulations", 120, property_suite},
        {"convexifier round trip x100", 0, convexifier_round_trip},
        {"gauge identity x20", 0, gauge_identity},
        {"asymptotes of 8x^3 - x^2 + 4y^2 at R = 5, 10, 20", 0, asymptotes},
        {"trinomial chart vs numeric topology x20", 0, chart_consistency},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = c.limit_seconds <= 0 || secs < c.limit_seconds;
        bool pass = o.pass && in_time;
        if (!pass) ++failures;
        std::printf("%s  %s: %s (%.2f s%s)\n", pass ? "PASS" : "FAIL", c.name.c_str(), o.detail.c_str(), secs,
                    in_time ? "" : ", over time limit");
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
