#include "explograph/lp.hpp"

#include <limits>

namespace explograph {

namespace {

// Dense tableau in equality form: rows[i] · y == rhs[i], y >= 0, minimizing cost · y.
struct Tableau {
    std::vector<RVec> rows;
    RVec rhs;
    std::vector<std::size_t> basis;
    std::size_t cols = 0;

    void pivot(std::size_t r, std::size_t c, RVec& cost, Rational& cost_val) {
        Rational inv = 1 / rows[r][c];
        for (auto& v : rows[r]) v *= inv;
        rhs[r] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || sgn(rows[i][c]) == 0) continue;
            Rational f = rows[i][c];
            for (std::size_t j = 0; j < cols; ++j)
                if (sgn(rows[r][j]) != 0) rows[i][j] -= f * rows[r][j];
            rhs[i] -= f * rhs[r];
        }
        if (sgn(cost[c]) != 0) {
            Rational f = cost[c];
            for (std::size_t j = 0; j < cols; ++j)
                if (sgn(rows[r][j]) != 0) cost[j] -= f * rows[r][j];
            cost_val -= f * rhs[r];
        }
        basis[r] = c;
    }

    // Runs simplex on reduced costs `cost` (already expressed in the current
    // basis). cost_val tracks -objective. Columns >= allowed are never entered.
    // Returns false when unbounded.
    bool run(RVec& cost, Rational& cost_val, std::size_t allowed) {
        for (;;) {
            std::size_t enter = cols;
            for (std::size_t j = 0; j < allowed; ++j)
                if (sgn(cost[j]) < 0) {
                    enter = j;
                    break;
                }
            if (enter == cols) return true;
            std::size_t leave = rows.size();
            Rational best;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (sgn(rows[i][enter]) <= 0) continue;
                Rational ratio = rhs[i] / rows[i][enter];
                if (leave == rows.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == rows.size()) return false;
            pivot(leave, enter, cost, cost_val);
        }
    }
};

}  // namespace

LpResult maximize(const LinearProgram& lp, const RVec& objective) {
    const std::size_t n = lp.num_vars;
    const std::size_t m_le = lp.le_rows.size(), m_eq = lp.eq_rows.size();
    const std::size_t m = m_le + m_eq;
    // Columns: x+ (n), x- (n), slacks (m_le), artificials (m).
    const std::size_t slack0 = 2 * n, art0 = 2 * n + m_le, cols = art0 + m;
    Tableau t;
    t.cols = cols;
    t.rows.assign(m, RVec(cols, Rational(0)));
    t.rhs.assign(m, Rational(0));
    t.basis.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        const RVec& row = i < m_le ? lp.le_rows[i] : lp.eq_rows[i - m_le];
        Rational b = i < m_le ? lp.le_rhs[i] : lp.eq_rhs[i - m_le];
        bool flip = sgn(b) < 0;
        for (std::size_t j = 0; j < n; ++j) {
            t.rows[i][j] = flip ? -row[j] : row[j];
            t.rows[i][n + j] = flip ? row[j] : -row[j];
        }
        if (i < m_le) t.rows[i][slack0 + i] = flip ? -1 : 1;
        t.rhs[i] = flip ? -b : b;
        t.rows[i][art0 + i] = 1;
        t.basis[i] = art0 + i;
    }
    // Phase one: minimize the sum of artificials.
    RVec cost(cols, Rational(0));
    Rational cost_val = 0;
    for (std::size_t i = 0; i < m; ++i) cost[art0 + i] = 1;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < cols; ++j) cost[j] -= t.rows[i][j];
        cost_val -= t.rhs[i];
    }
    t.run(cost, cost_val, art0);
    if (sgn(cost_val) != 0) return {LpStatus::Infeasible, 0, {}};
    // Drive artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < t.rows.size();) {
        if (t.basis[i] < art0) {
            ++i;
            continue;
        }
        std::size_t c = art0;
        for (std::size_t j = 0; j < art0; ++j)
            if (sgn(t.rows[i][j]) != 0) {
                c = j;
                break;
            }
        if (c == art0) {
            t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
            t.rhs.erase(t.rhs.begin() + static_cast<std::ptrdiff_t>(i));
            t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
            continue;
        }
        RVec dummy(cols, Rational(0));
        Rational dv = 0;
        t.pivot(i, c, dummy, dv);
        ++i;
    }
    // Phase two: minimize -objective.
    RVec cost2(cols, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
        cost2[j] = -objective[j];
        cost2[n + j] = objective[j];
    }
    Rational val2 = 0;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        Rational f = cost2[t.basis[i]];
        if (sgn(f) == 0) continue;
        for (std::size_t j = 0; j < cols; ++j) cost2[j] -= f * t.rows[i][j];
        val2 -= f * t.rhs[i];
    }
    bool bounded = t.run(cost2, val2, art0);
    RVec y(cols, Rational(0));
    for (std::size_t i = 0; i < t.rows.size(); ++i) y[t.basis[i]] = t.rhs[i];
    LpResult res;
    res.x.assign(n, Rational(0));
    for (std::size_t j = 0; j < n; ++j) res.x[j] = y[j] - y[n + j];
    if (!bounded) {
        res.status = LpStatus::Unbounded;
        return res;
    }
    res.status = LpStatus::Optimal;
    res.value = dot(objective, res.x);
    return res;
}

LpResult minimize(const LinearProgram& lp, const RVec& objective) {
    RVec neg(objective);
    for (auto& v : neg) v = -v;
    LpResult r = maximize(lp, neg);
    if (r.status == LpStatus::Optimal) r.value = -r.value;
    return r;
}

LpResult find_feasible(const LinearProgram& lp) {
    return maximize(lp, RVec(lp.num_vars, Rational(0)));
}

}  // namespace explograph
