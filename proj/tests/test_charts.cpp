#include "patchwork/charts.hpp"
#include "patchwork/io.hpp"
#include "patchwork/pipeline.hpp"
#include "patchwork/polyval.hpp"
#include "patchwork/presets.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace patchwork;

namespace {

Chart chart_of(const char* expr) {
    SparsePolynomial a = SparsePolynomial::parse(expr);
    return a.newton_polygon().size() <= 2 ? quasihomogeneous_chart(a) : trinomial_chart(a);
}

std::string projective_code(const Chart& c) {
    GluedComplex g = projective_topology(c);
    return g.code ? g.code->encoding : "none: " + g.note;
}

}  // namespace

TEST(Charts, Circle) {
    Chart c = chart_of("x^2 + y^2 - 1");
    EXPECT_EQ(c.polygon, degree_triangle(2));
    GluedComplex a = affine_topology(c);
    EXPECT_EQ(a.carrier, "affine-plane");
    EXPECT_EQ(a.components, 1u);
    EXPECT_EQ(a.unbounded_branches, 0u);
    EXPECT_EQ(projective_code(c), "1");
}

TEST(Charts, Hyperbola) {
    Chart c = chart_of("x*y - 1");
    GluedComplex a = affine_topology(c);
    EXPECT_EQ(a.components, 2u);
    EXPECT_EQ(a.unbounded_branches, 4u);
    EXPECT_EQ(projective_code(c), "1");
}

TEST(Charts, EmptyConic) {
    Chart c = chart_of("x^2 + y^2 + 1");
    EXPECT_TRUE(c.global_curve().empty());
    EXPECT_EQ(projective_code(c), "0");
}

TEST(Charts, LinesAndCubics) {
    EXPECT_EQ(projective_code(chart_of("x + y + 1")), "J");
    EXPECT_EQ(projective_code(chart_of("x - y")), "J");
    EXPECT_EQ(projective_code(chart_of("1 + x^3 - y^3")), "J");
}

TEST(Charts, QuasihomogeneousRootsLandInQuadrants) {
    // roots of x^2 - 5xy + 4y^2 at x/y = 1 and 4, with both signs of (x, y)
    Chart c = chart_of("x^2 - 5x*y + 4y^2");
    auto n = c.points_per_quadrant();
    EXPECT_EQ(n[0], 2u);
    EXPECT_EQ(n[0] + n[1] + n[2] + n[3], 4u);
}

TEST(Charts, PeripherallyDegenerateThrows) {
    EXPECT_THROW(chart_of("x^2 - 2x*y + y^2"), std::invalid_argument);
}

TEST(Charts, AdjoinRejectsZeroNormal) {
    Chart c = chart_of("x^2 + y^2 - 1");
    EXPECT_THROW(adjoin_side(c, {0, 0}), std::invalid_argument);
}

TEST(Charts, AdjoinAddsASide) {
    Chart c = chart_of("8x^3 - x^2 + 4y^2");
    Chart d = adjoin_side(c, {-1, 0});
    ASSERT_EQ(d.adjoined.size(), 1u);
    EXPECT_EQ(d.adjoined[0], (LatticePoint{-1, 0}));
    EXPECT_GT(d.polygon.doubled_area(), c.polygon.doubled_area());
    auto sides = chart_sides(d);
    EXPECT_TRUE(std::any_of(sides.begin(), sides.end(), [](const ChartSide& s) { return s.inserted; }));
}

TEST(Charts, CutAlongAnExistingSide) {
    // the closing cut runs along the side y^4 .. 1, leaving curve ends on it
    EXPECT_EQ(projective_code(chart_of("-x^3*y + 3/4*y^4 - 5/3")), "1");
}

TEST(Charts, TCurveChartAgreesWithQuotient) {
    for (auto t : {harnack_triangulation(3), harnack_triangulation(4), gudkov_triangulation()}) {
        SymmetricComplex sc = symmetrize(t);
        std::string want = isotopy_code(projective_quotient(sc, midline_curve(sc))).encoding;
        EXPECT_EQ(projective_code(t_curve_chart(sc)), want);
    }
}

TEST(Charts, PatchworkOfExampleParts) {
    auto parts = example_parts();
    Chart glued = patchwork_charts({trinomial_chart(parts[0]), trinomial_chart(parts[1])});
    EXPECT_EQ(glued.polygon, ConvexPolygon({{0, 0}, {3, 0}, {0, 2}}));
    EXPECT_EQ(projective_code(glued), "J ∪ 1");
}

TEST(Charts, PatchworkRejectsOverlapAndMismatch) {
    Chart a = chart_of("8x^3 - x^2 + 4y^2");
    EXPECT_THROW(patchwork_charts({a, a}), std::invalid_argument);
    try {
        patchwork_charts({a, chart_of("4y^2 + x^2 + 1")});
        FAIL() << "expected incompatible charts";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("incompatible charts"), std::string::npos);
    }
}

TEST(Charts, CanonicalTraceIgnoresOrder) {
    Chart c = chart_of("x^2 + y^2 - 1");
    Chart d = c;
    std::reverse(d.curve.begin(), d.curve.end());
    for (auto& s : d.curve) std::swap(s.a, s.b);
    EXPECT_EQ(canonical_trace(c), canonical_trace(d));
}

TEST(ChartReport, Modes) {
    Json plain = chart_report("x^2 + y^2 - 1", {}, "");
    EXPECT_EQ(plain["v"], 1);
    EXPECT_EQ(plain["kind"], "chart");
    EXPECT_FALSE(plain.contains("topology"));
    Json proj = chart_report("x^2 + y^2 - 1", {}, "projective");
    EXPECT_EQ(proj["topology"]["code"], "1");
    Json aff = chart_report("x*y - 1", {}, "affine");
    EXPECT_EQ(aff["topology"]["unbounded_branches"], 4);
    Json adj = chart_report("8x^3 - x^2 + 4y^2", {{-1, 0}}, "");
    EXPECT_EQ(adj["chart"]["adjoined"].size(), 1u);
    EXPECT_THROW(chart_report("x^2 + y^2 - 1", {}, "spherical"), InputError);
    EXPECT_THROW(chart_report("x^2 + y^2 + x*y - 1", {}, ""), InputError);
}
