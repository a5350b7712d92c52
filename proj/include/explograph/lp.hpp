#pragma once

// Exact rational linear programming: two-phase tableau simplex with Bland's
// anticycling rule, so every call terminates.

#include <vector>

#include "explograph/rational.hpp"

namespace explograph {

struct LinearProgram {
    std::size_t num_vars = 0;
    std::vector<RVec> le_rows;  // le_rows[i] · x <= le_rhs[i]
    RVec le_rhs;
    std::vector<RVec> eq_rows;  // eq_rows[i] · x == eq_rhs[i]
    RVec eq_rhs;

    explicit LinearProgram(std::size_t n = 0) : num_vars(n) {}

    void add_le(RVec row, Rational rhs) {
        le_rows.push_back(std::move(row));
        le_rhs.push_back(std::move(rhs));
    }
    void add_ge(RVec row, Rational rhs) {
        for (auto& v : row) v = -v;
        add_le(std::move(row), -rhs);
    }
    void add_eq(RVec row, Rational rhs) {
        eq_rows.push_back(std::move(row));
        eq_rhs.push_back(std::move(rhs));
    }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational value;  // objective at optimum
    RVec x;          // optimal point (or a feasible point when unbounded)
};

// Maximizes objective · x. Variables are free.
LpResult maximize(const LinearProgram& lp, const RVec& objective);
LpResult minimize(const LinearProgram& lp, const RVec& objective);

// Feasibility only; on success result.x is a feasible point.
LpResult find_feasible(const LinearProgram& lp);

}  // namespace explograph
