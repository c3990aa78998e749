#pragma once

#include "patchwork/io.hpp"
#include "patchwork/polyval.hpp"

#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace patchwork {

/// No convex height function exists (or the supplied one fails).
class InfeasibleError : public std::runtime_error {
public:
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

/// Combinatorial pipeline: validation, convexification, T-curve and its code.
BuildReport build(const PatchworkProblem& p);

/// Checks supplied heights, or searches for some when none are given.
ConvexifyReport convexify(const PatchworkProblem& p);
ConvexifyReport convexify(const ConvexPartition& p, const std::optional<HeightFunction>& given = std::nullopt);

/// Numeric verifier on the problem's heights (found by the LP when absent).
/// Throws InfeasibleError when no convex heights exist.
NumericReport verify(const PatchworkProblem& p, const VerifyOptions& opts);

/// Chart of a trinomial or quasi-homogeneous polynomial, with sides adjoined
/// in order and, for mode "affine" or "projective", the glued topology.
Json chart_report(const std::string& expr, const std::vector<LatticePoint>& adjoin, std::string_view mode);

}  // namespace patchwork
