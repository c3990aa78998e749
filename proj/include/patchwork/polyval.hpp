#pragma once

#include "patchwork/convexity.hpp"
#include "patchwork/lattice.hpp"
#include "patchwork/polynomial.hpp"
#include "patchwork/topology.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace patchwork {

/// b_t(x, y) = sum of c_w t^h(w) x^i y^j.
class PatchworkFamily {
public:
    struct Term {
        BigRational coefficient;
        std::int64_t height = 0;

        friend bool operator==(const Term&, const Term&) = default;
    };

    PatchworkFamily() = default;
    explicit PatchworkFamily(std::map<LatticePoint, Term> terms);

    const std::map<LatticePoint, Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    HeightFunction heights() const;
    SparsePolynomial coefficients() const;

    /// Exact polynomial at a positive rational t.
    SparsePolynomial evaluate(const BigRational& t) const;
    /// Multiplies by t^k.
    PatchworkFamily shifted(std::int64_t k) const;

    /// e.g. "8x^3 - x^2 + 4y^2 + t^2"
    std::string to_string() const;

    friend bool operator==(const PatchworkFamily&, const PatchworkFamily&) = default;

private:
    std::map<LatticePoint, Term> terms_;
};

/// Merges the parts with heights ν.  Throws std::invalid_argument with
/// "incompatible parts" when two parts disagree on a shared face, and with
/// the violated condition when ν does not convexify the induced partition.
PatchworkFamily patchwork_family(const std::vector<SparsePolynomial>& parts, const HeightFunction& nu);

/// The special case of monomials ±x^i y^j at the triangulation vertices.
PatchworkFamily patchwork_family(const SignedTriangulation& t, const HeightFunction& nu);

/// (ln|x|, ln|y|).  Throws std::domain_error on an axis point.
std::array<double, 2> log_map(double x, double y);

/// (x t^a, y t^b).
std::array<double, 2> quasi_homothety(std::array<double, 2> p, double a, double b, double t);
/// b ∘ qh_{w,t}: coefficient of x^ω times t^{w·ω}.  Throws std::invalid_argument
/// when some w·ω is not an integer.
SparsePolynomial quasi_homothety(const SparsePolynomial& b, const BigRational& a, const BigRational& bw,
                                 const BigRational& t);
/// Family version: heights shift by a i + b j.
PatchworkFamily quasi_homothety(const PatchworkFamily& f, std::int64_t a, std::int64_t b);

/// Atiyah moment map for the chosen lattice points with base point omegas[base].
/// Throws std::domain_error on an axis point.
std::array<double, 2> moment_map(std::array<double, 2> y, const std::vector<LatticePoint>& omegas,
                                 std::size_t base = 0);

/// Non-degeneracy of every face truncation.  Defined for up to three terms;
/// throws std::invalid_argument otherwise.
bool completely_nondegenerate(const SparsePolynomial& b);

struct NumericIsotopy {
    int resolution = 0;
    std::int64_t degree = 0;
    std::array<std::size_t, 4> quadrant_components{};
    std::size_t affine_components = 0;
    std::size_t unbounded_ends = 0;
    std::optional<IsotopyCode> code;
    PLCurve curve;  // in the diamond of radius `resolution`
};

/// Topology of V(b) in the real plane and of its projective closure, read off
/// a sign grid on the compactified moment image.  Throws std::invalid_argument
/// for resolution < 8 or a zero polynomial.
NumericIsotopy numeric_isotopy(const SparsePolynomial& b, int resolution);

struct VerifyOptions {
    std::vector<BigRational> schedule;  // decreasing t; empty means 2^-1 .. 2^-12
    int resolution = 512;
    bool stop_when_stable = true;
};

std::vector<BigRational> halving_schedule(int first, int steps);

struct NumericStep {
    BigRational t;
    std::optional<std::string> code;
    std::size_t components = 0;
};

struct NumericReport {
    BigRational t;
    int resolution = 0;
    std::array<std::size_t, 4> quadrant_components{};
    std::size_t affine_components = 0;
    std::optional<IsotopyCode> code;
    std::optional<IsotopyCode> combinatorial;
    bool stabilized = false;
    double mismatch_fraction = 0.0;
    std::vector<NumericStep> steps;
};

/// Runs numeric_isotopy on b_t along the schedule and compares with the
/// combinatorial patchwork.  Throws std::invalid_argument when ν does not
/// convexify t.
NumericReport verify_patchwork(const SignedTriangulation& t, const HeightFunction& nu, const VerifyOptions& opts = {});
/// Same with explicit coefficients; their signs must match the triangulation.
NumericReport verify_patchwork(const PatchworkFamily& f, const SignedTriangulation& t, const VerifyOptions& opts = {});

/// Combinatorial code of the T-curve, through the projective quotient for a
/// degree triangle and through the glued chart otherwise.
std::optional<IsotopyCode> combinatorial_code(const SignedTriangulation& t);

/// For each log radius R: the largest distance from a curve point on the
/// circle of radius R (in log coordinates) to the nearest asymptote line of
/// a side truncation.
std::vector<double> asymptote_distances(const SparsePolynomial& a, const std::vector<double>& radii);

}  // namespace patchwork
