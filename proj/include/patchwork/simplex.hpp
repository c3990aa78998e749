#pragma once

#include "patchwork/rational.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace patchwork {

enum class Relation { LessEqual, Equal, GreaterEqual };

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LinearTerm {
    std::size_t var;
    BigRational coef;
};

struct LinearConstraint {
    std::vector<LinearTerm> terms;
    Relation relation = Relation::Equal;
    BigRational rhs{0};
};

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<BigRational> x;
    BigRational objective{0};
    std::size_t pivots = 0;
};

/// Exact two-phase primal simplex over mpq.  All variables are nonnegative;
/// the objective is minimized.  Bland's rule guarantees termination.
class LinearProgram {
public:
    explicit LinearProgram(std::size_t num_vars) : num_vars_(num_vars) {}

    std::size_t num_vars() const { return num_vars_; }
    std::size_t num_constraints() const { return constraints_.size(); }

    void add(LinearConstraint c);
    void minimize(std::vector<LinearTerm> objective) { objective_ = std::move(objective); }

    LpSolution solve() const;

private:
    std::size_t num_vars_;
    std::vector<LinearConstraint> constraints_;
    std::vector<LinearTerm> objective_;
};

}  // namespace patchwork
