#pragma once

#include "patchwork/lattice.hpp"
#include "patchwork/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace patchwork {

/// Integer heights on lattice points.
class HeightFunction {
public:
    HeightFunction() = default;
    explicit HeightFunction(std::map<LatticePoint, std::int64_t> heights) : heights_(std::move(heights)) {}

    std::int64_t at(LatticePoint p) const;
    bool has(LatticePoint p) const { return heights_.count(p) != 0; }
    void set(LatticePoint p, std::int64_t h) { heights_[p] = h; }
    const std::map<LatticePoint, std::int64_t>& values() const { return heights_; }
    std::size_t size() const { return heights_.size(); }

    friend bool operator==(const HeightFunction&, const HeightFunction&) = default;

private:
    std::map<LatticePoint, std::int64_t> heights_;
};

/// Subdivision of a convex lattice polygon into convex lattice cells.
struct ConvexPartition {
    ConvexPolygon domain;
    std::vector<ConvexPolygon> cells;
};

ConvexPartition as_partition(const SignedTriangulation& t);

/// Empty when the partition is a valid subdivision of its domain.
std::vector<std::string> partition_violations(const ConvexPartition& p);

/// Farkas certificate: multipliers on the labelled linear conditions
/// (affinity equalities, unit-slack folds, gauge) whose combination cancels
/// every height variable while the fold multipliers sum to 1.
struct InfeasibilityCertificate {
    struct Entry {
        std::string label;
        BigRational multiplier;
    };
    std::vector<Entry> entries;
    bool verified = false;
};

struct Infeasible {
    InfeasibilityCertificate certificate;
};

using ConvexifyResult = std::variant<HeightFunction, Infeasible>;

/// Throws std::invalid_argument("invalid input: ...") for an invalid partition.
ConvexifyResult find_convexifying_heights(const ConvexPartition& p);
ConvexifyResult find_convexifying_heights(const SignedTriangulation& t);

/// Throws std::invalid_argument when ν misses a cell vertex.
bool check_convexifies(const ConvexPartition& p, const HeightFunction& nu);
bool check_convexifies(const SignedTriangulation& t, const HeightFunction& nu);

/// The first violated condition, or empty when ν convexifies.
std::string convexity_violation(const ConvexPartition& p, const HeightFunction& nu);

/// Domains of linearity of the lower convex hull of the lifted points.
/// Throws std::invalid_argument for a collinear point set.
ConvexPartition regular_subdivision(const std::vector<LatticePoint>& points, const HeightFunction& nu);

/// Affine function α i + β j + γ with rational coefficients.
struct AffineFunction {
    BigRational alpha;
    BigRational beta;
    BigRational gamma;

    BigRational operator()(LatticePoint p) const { return alpha * p.i + beta * p.j + gamma; }
};

/// The affine function interpolating ν on three affinely independent points.
AffineFunction interpolate(LatticePoint a, LatticePoint b, LatticePoint c, const BigRational& ha,
                           const BigRational& hb, const BigRational& hc);

/// Extends ν to every lattice point of the partition's domain through the cell
/// whose affine piece contains it.
HeightFunction extend_to_lattice(const ConvexPartition& p, const HeightFunction& nu);

}  // namespace patchwork
