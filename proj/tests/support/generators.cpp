#include "generators.hpp"

#include "patchwork/presets.hpp"

#include <stdexcept>
#include <variant>

namespace patchwork::testing {

bool flip_random_edge(SignedTriangulation& t, Rng& rng) {
    auto edges = interior_edges(t);
    if (edges.empty()) return false;
    auto [u, v] = edges[rng() % edges.size()];
    int a = -1, b = -1, w = -1, x = -1;
    for (std::size_t k = 0; k < t.triangles.size(); ++k) {
        const auto& tri = t.triangles[k];
        int hits = 0, other = -1;
        for (int q : tri) {
            if (q == u || q == v) ++hits;
            else other = q;
        }
        if (hits != 2) continue;
        if (a < 0) {
            a = static_cast<int>(k);
            w = other;
        } else {
            b = static_cast<int>(k);
            x = other;
        }
    }
    if (b < 0) return false;
    const auto& P = t.vertices;
    auto su = doubled_area(P[w], P[x], P[u]);
    auto sv = doubled_area(P[w], P[x], P[v]);
    if (!((su > 0 && sv < 0) || (su < 0 && sv > 0))) return false;
    t.triangles[a] = {w, x, u};
    t.triangles[b] = {w, x, v};
    t = normalized(std::move(t));
    return true;
}

void randomize_signs(SignedTriangulation& t, Rng& rng) {
    for (auto& s : t.signs) s = (rng() & 1) ? 1 : -1;
}

SignedTriangulation random_triangulation(std::int64_t m, int flips, Rng& rng) {
    SignedTriangulation t = harnack_triangulation(m);
    for (int k = 0; k < flips; ++k) flip_random_edge(t, rng);
    randomize_signs(t, rng);
    return t;
}

ConvexSample random_convex_triangulation(std::int64_t m, Rng& rng) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        int flips = static_cast<int>(rng() % static_cast<std::uint64_t>(4 * m * m + 1));
        SignedTriangulation t = random_triangulation(m, flips, rng);
        auto result = find_convexifying_heights(t);
        if (auto* h = std::get_if<HeightFunction>(&result)) return {t, *h};
    }
    throw std::runtime_error("no convex triangulation found");
}

bool is_convex(const SignedTriangulation& t) {
    return std::holds_alternative<HeightFunction>(find_convexifying_heights(t));
}

SignedTriangulation random_nonconvex_triangulation(std::int64_t m, Rng& rng, int max_checks) {
    SignedTriangulation t = harnack_triangulation(m);
    for (int k = 0; k < max_checks; ++k) {
        for (int f = 0; f < 10; ++f) flip_random_edge(t, rng);
        if (!is_convex(t)) {
            randomize_signs(t, rng);
            return t;
        }
    }
    throw std::runtime_error("no non-convex triangulation found");
}

SparsePolynomial random_smooth_trinomial(Rng& rng) {
    std::int64_t m = 2 + static_cast<std::int64_t>(rng() % 5);
    std::array<LatticePoint, 3> support{{{0, 0}, {m, 0}, {0, m}}};
    switch (rng() % 6) {
        case 0: support[0] = {1, 0}; break;
        case 1: support[0] = {0, 1}; break;
        case 2: support[1] = {m - 1, 1}; break;
        case 3: support[2] = {1, m - 1}; break;
        default: break;
    }
    SparsePolynomial a;
    for (const auto& w : support) {
        std::int64_t num = 1 + static_cast<std::int64_t>(rng() % 9);
        std::int64_t den = 1 + static_cast<std::int64_t>(rng() % 4);
        BigRational c(num, den);
        if (rng() & 1) c = -c;
        a.add_term(w, c);
    }
    return a;
}

}  // namespace patchwork::testing
