#include "patchwork/simplex.hpp"

#include <stdexcept>

namespace patchwork {

void LinearProgram::add(LinearConstraint c) {
    for (const auto& t : c.terms) {
        if (t.var >= num_vars_) throw std::out_of_range("constraint references unknown variable");
    }
    constraints_.push_back(std::move(c));
}

namespace {

// Dense tableau; row 0..m-1 are constraints, the cost row is kept apart.
struct Tableau {
    std::size_t rows = 0;
    std::size_t cols = 0;  // excluding rhs
    std::vector<std::vector<BigRational>> a;
    std::vector<BigRational> rhs;
    std::vector<std::size_t> basis;
    std::size_t pivots = 0;

    void pivot(std::size_t r, std::size_t c) {
        ++pivots;
        BigRational inv = 1 / a[r][c];
        auto& pr = a[r];
        for (std::size_t j = 0; j < cols; ++j) {
            if (pr[j] != 0) pr[j] *= inv;
        }
        rhs[r] *= inv;
        std::vector<std::size_t> nz;
        for (std::size_t j = 0; j < cols; ++j) {
            if (pr[j] != 0) nz.push_back(j);
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            BigRational f = a[i][c];
            for (std::size_t j : nz) a[i][j] -= f * pr[j];
            rhs[i] -= f * rhs[r];
        }
        basis[r] = c;
    }

    // Reduced costs of `cost` with respect to the current basis.
    std::vector<BigRational> reduced(const std::vector<BigRational>& cost) const {
        std::vector<BigRational> d(cost);
        for (std::size_t i = 0; i < rows; ++i) {
            const BigRational& cb = cost[basis[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) {
                if (a[i][j] != 0) d[j] -= cb * a[i][j];
            }
        }
        return d;
    }

    // Runs Bland's rule on the allowed columns. Returns false when unbounded.
    bool optimize(const std::vector<BigRational>& cost, const std::vector<bool>& allowed) {
        std::vector<BigRational> d = reduced(cost);
        while (true) {
            std::size_t enter = cols;
            for (std::size_t j = 0; j < cols; ++j) {
                if (allowed[j] && d[j] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == cols) return true;
            std::size_t leave = rows;
            BigRational best;
            for (std::size_t i = 0; i < rows; ++i) {
                if (a[i][enter] <= 0) continue;
                BigRational ratio = rhs[i] / a[i][enter];
                if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == rows) return false;
            pivot(leave, enter);
            BigRational f = d[enter];
            for (std::size_t j = 0; j < cols; ++j) {
                if (a[leave][j] != 0) d[j] -= f * a[leave][j];
            }
        }
    }
};

}  // namespace

LpSolution LinearProgram::solve() const {
    const std::size_t m = constraints_.size();
    const std::size_t n = num_vars_;

    std::size_t slack_count = 0;
    for (const auto& c : constraints_) {
        if (c.relation != Relation::Equal) ++slack_count;
    }
    const std::size_t art_begin = n + slack_count;
    const std::size_t cols = art_begin + m;

    Tableau tab;
    tab.rows = m;
    tab.cols = cols;
    tab.a.assign(m, std::vector<BigRational>(cols));
    tab.rhs.assign(m, BigRational(0));
    tab.basis.assign(m, 0);

    std::size_t slack = n;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = constraints_[i];
        for (const auto& t : c.terms) tab.a[i][t.var] += t.coef;
        if (c.relation == Relation::LessEqual) tab.a[i][slack++] = 1;
        if (c.relation == Relation::GreaterEqual) tab.a[i][slack++] = -1;
        tab.rhs[i] = c.rhs;
        if (tab.rhs[i] < 0) {
            for (auto& v : tab.a[i]) v = -v;
            tab.rhs[i] = -tab.rhs[i];
        }
        tab.a[i][art_begin + i] = 1;
        tab.basis[i] = art_begin + i;
    }

    // phase 1: minimize the sum of artificials
    std::vector<BigRational> cost1(cols);
    for (std::size_t j = art_begin; j < cols; ++j) cost1[j] = 1;
    std::vector<bool> all(cols, true);
    tab.optimize(cost1, all);

    BigRational infeasibility = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (tab.basis[i] >= art_begin) infeasibility += tab.rhs[i];
    }
    LpSolution sol;
    if (infeasibility != 0) {
        sol.status = LpStatus::Infeasible;
        sol.pivots = tab.pivots;
        return sol;
    }

    // drive remaining (zero-valued) artificials out of the basis
    for (std::size_t i = 0; i < m; ++i) {
        if (tab.basis[i] < art_begin) continue;
        for (std::size_t j = 0; j < art_begin; ++j) {
            if (tab.a[i][j] != 0) {
                tab.pivot(i, j);
                break;
            }
        }
    }

    std::vector<BigRational> cost2(cols);
    for (const auto& t : objective_) cost2[t.var] += t.coef;
    std::vector<bool> allowed(cols, true);
    for (std::size_t j = art_begin; j < cols; ++j) allowed[j] = false;
    bool bounded = tab.optimize(cost2, allowed);

    sol.pivots = tab.pivots;
    if (!bounded) {
        sol.status = LpStatus::Unbounded;
        return sol;
    }
    sol.status = LpStatus::Optimal;
    sol.x.assign(n, BigRational(0));
    for (std::size_t i = 0; i < m; ++i) {
        if (tab.basis[i] < n) sol.x[tab.basis[i]] = tab.rhs[i];
    }
    for (const auto& t : objective_) sol.objective += t.coef * sol.x[t.var];
    return sol;
}

}  // namespace patchwork
