#include "patchwork/svg.hpp"

#include "patchwork/topology.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace patchwork {

namespace {

double to_double(const Rational& r) { return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator()); }

class Canvas {
public:
    Canvas(double extent, double ox, double size) : extent_(extent), ox_(ox), size_(size) {}

    double x(double u) const { return ox_ + (u + extent_) / (2 * extent_) * size_; }
    double y(double v) const { return 20 + (extent_ - v) / (2 * extent_) * size_; }

private:
    double extent_;
    double ox_;
    double size_;
};

void line(std::ostringstream& out, const Canvas& c, double u0, double v0, double u1, double v1, const char* style) {
    out << "<line x1=\"" << c.x(u0) << "\" y1=\"" << c.y(v0) << "\" x2=\"" << c.x(u1) << "\" y2=\"" << c.y(v1)
        << "\" " << style << "/>\n";
}

void diamond(std::ostringstream& out, const Canvas& c, double r) {
    out << "<polygon points=\"" << c.x(r) << "," << c.y(0) << " " << c.x(0) << "," << c.y(r) << " " << c.x(-r) << ","
        << c.y(0) << " " << c.x(0) << "," << c.y(-r) << "\" fill=\"none\" stroke=\"#444\" stroke-width=\"1\"/>\n";
}

void curve(std::ostringstream& out, const Canvas& c, const std::vector<Segment>& segs) {
    for (const auto& s : segs) {
        line(out, c, to_double(s.a.x), to_double(s.a.y), to_double(s.b.x), to_double(s.b.y),
             "stroke=\"black\" stroke-width=\"2\" stroke-linecap=\"round\"");
    }
}

}  // namespace

std::string render_svg(const SignedTriangulation& t, const BuildReport& report) {
    std::int64_t m = 1;
    for (const auto& v : t.vertices) m = std::max(m, v.i + v.j);
    const double r = static_cast<double>(m);
    const double extent = r * 1.08;
    const double size = 400;
    std::ostringstream out;
    out << std::fixed << std::setprecision(2);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * size + 60 << "\" height=\"" << size + 60
        << "\" font-family=\"sans-serif\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    Canvas left(extent, 20, size);
    for (const auto& q : kQuadrants) {
        for (const auto& tri : t.triangles) {
            for (int e = 0; e < 3; ++e) {
                LatticePoint a = reflect(t.vertices[static_cast<std::size_t>(tri[static_cast<std::size_t>(e)])], q);
                LatticePoint b = reflect(t.vertices[static_cast<std::size_t>(tri[static_cast<std::size_t>((e + 1) % 3)])], q);
                line(out, left, static_cast<double>(a.i), static_cast<double>(a.j), static_cast<double>(b.i),
                     static_cast<double>(b.j), "stroke=\"#ccc\" stroke-width=\"1\"");
            }
        }
    }
    line(out, left, -r, 0, r, 0, "stroke=\"#888\" stroke-width=\"1\" stroke-dasharray=\"4 3\"");
    line(out, left, 0, -r, 0, r, "stroke=\"#888\" stroke-width=\"1\" stroke-dasharray=\"4 3\"");
    curve(out, left, report.curve);
    for (std::size_t k = 0; k < t.vertices.size(); ++k) {
        for (const auto& q : kQuadrants) {
            LatticePoint p = reflect(t.vertices[k], q);
            if ((p.i == 0 && q.eps < 0) || (p.j == 0 && q.delta < 0)) continue;
            int s = extended_sign(t.signs[k], t.vertices[k], q);
            out << "<text x=\"" << left.x(static_cast<double>(p.i)) << "\" y=\"" << left.y(static_cast<double>(p.j)) + 4
                << "\" font-size=\"11\" text-anchor=\"middle\" fill=\"" << (s > 0 ? "#b22" : "#22b") << "\">"
                << (s > 0 ? "+" : "&#8722;") << "</text>\n";
        }
    }

    Canvas right(extent, size + 40, size);
    diamond(out, right, r);
    curve(out, right, report.curve);
    // antipodal gluing: matching arrows on opposite sides
    const std::array<std::array<double, 4>, 4> sides{{{r, 0, 0, r}, {0, r, -r, 0}, {-r, 0, 0, -r}, {0, -r, r, 0}}};
    const char* colors[2] = {"#d80", "#080"};
    for (std::size_t k = 0; k < 4; ++k) {
        const auto& s = sides[k];
        double mx = (s[0] + s[2]) / 2, my = (s[1] + s[3]) / 2;
        double dx = (s[2] - s[0]) * 0.12, dy = (s[3] - s[1]) * 0.12;
        out << "<line x1=\"" << right.x(mx - dx) << "\" y1=\"" << right.y(my - dy) << "\" x2=\"" << right.x(mx + dx)
            << "\" y2=\"" << right.y(my + dy) << "\" stroke=\"" << colors[k % 2]
            << "\" stroke-width=\"3\" marker-end=\"url(#arrow" << k % 2 << ")\"/>\n";
    }
    out << "<defs>";
    for (int k = 0; k < 2; ++k) {
        out << "<marker id=\"arrow" << k << "\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"4\" orient=\"auto\">"
            << "<path d=\"M0,0 L8,4 L0,8 z\" fill=\"" << colors[k] << "\"/></marker>";
    }
    out << "</defs>\n";
    out << "<text x=\"20\" y=\"" << size + 50 << "\" font-size=\"14\">code: " << (report.code ? *report.code : "n/a")
        << "   components: " << report.components << "</text>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace patchwork
