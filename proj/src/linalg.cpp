#include "explograph/linalg.hpp"

#include <cstdlib>
#include <numeric>
#include <utility>

#include "explograph/error.hpp"

namespace explograph {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in lattice computation");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow in lattice computation");
    return r;
}

// Extended gcd: returns g = gcd(a,b) >= 0 with x*a + y*b == g.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
    std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        std::int64_t q = a / b;
        std::tie(a, b) = std::make_pair(b, a - q * b);
        std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
        std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
    }
    if (a < 0) {
        a = -a;
        x0 = -x0;
        y0 = -y0;
    }
    x = x0;
    y = y0;
    return a;
}

RMatrix to_rmatrix(const IMatrix& m) {
    RMatrix r;
    for (const auto& row : m) r.push_back(to_rvec(row));
    return r;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RMatrix& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t p = row;
        while (p < m.size() && sgn(m[p][c]) == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        Rational inv = 1 / m[row][c];
        for (std::size_t j = c; j < m[row].size(); ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || sgn(m[i][c]) == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < m[i].size(); ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

}  // namespace

std::int64_t gcd_of(const IVec& v) {
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x);
    return g;
}

IVec primitive(const IVec& v) {
    std::int64_t g = gcd_of(v);
    if (g == 0) return v;
    IVec r(v);
    for (auto& x : r) x /= g;
    return r;
}

std::size_t rank(RMatrix m) {
    if (m.empty()) return 0;
    return rref(m, m[0].size()).size();
}

std::size_t rank(const IMatrix& m) { return rank(to_rmatrix(m)); }

SolveResult solve(RMatrix a, RVec b) {
    std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
    auto piv = rref(a, cols);
    for (std::size_t i = piv.size(); i < a.size(); ++i)
        if (sgn(a[i][cols]) != 0) return {SolveKind::None, {}};
    if (piv.size() < cols) return {SolveKind::Infinite, {}};
    RVec x(cols);
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = a[i][cols];
    return {SolveKind::Unique, std::move(x)};
}

std::optional<RVec> solve_unique(RMatrix a, RVec b) {
    auto r = solve(std::move(a), std::move(b));
    if (r.kind != SolveKind::Unique) return std::nullopt;
    return std::move(r.x);
}

std::vector<RVec> nullspace(RMatrix a, std::size_t cols) {
    auto piv = rref(a, cols);
    std::vector<bool> is_piv(cols, false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<RVec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        RVec v(cols, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -a[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational determinant(RMatrix m) {
    std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(m[p][c]) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(m[i][c]) == 0) continue;
            Rational f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

Integer determinant(const IMatrix& m) {
    Rational d = determinant(to_rmatrix(m));
    return d.get_num();
}

std::vector<IVec> integer_kernel_basis(const IMatrix& a, std::size_t cols) {
    IMatrix work = a;
    IMatrix u = identity_matrix(cols);  // columns of u track the transform
    std::size_t pivot = 0;
    auto col_op = [&](std::size_t c1, std::size_t c2, std::int64_t p, std::int64_t q, std::int64_t r,
                      std::int64_t s) {
        // (c1, c2) <- (p*c1 + q*c2, r*c1 + s*c2)
        for (auto& row : work) {
            std::int64_t x = row[c1], y = row[c2];
            row[c1] = checked_add(checked_mul(p, x), checked_mul(q, y));
            row[c2] = checked_add(checked_mul(r, x), checked_mul(s, y));
        }
        for (auto& row : u) {
            std::int64_t x = row[c1], y = row[c2];
            row[c1] = checked_add(checked_mul(p, x), checked_mul(q, y));
            row[c2] = checked_add(checked_mul(r, x), checked_mul(s, y));
        }
    };
    for (std::size_t i = 0; i < work.size() && pivot < cols; ++i) {
        for (std::size_t c = pivot + 1; c < cols; ++c) {
            std::int64_t x = work[i][pivot], y = work[i][c];
            if (y == 0) continue;
            std::int64_t s, t;
            std::int64_t g = ext_gcd(x, y, s, t);
            // [s t; -y/g x/g] has determinant 1.
            col_op(pivot, c, s, t, -y / g, x / g);
        }
        if (work[i][pivot] != 0) ++pivot;
    }
    std::vector<IVec> basis;
    for (std::size_t c = pivot; c < cols; ++c) {
        IVec v(cols);
        for (std::size_t r = 0; r < cols; ++r) v[r] = u[r][c];
        for (auto x : v) {
            if (x == 0) continue;
            if (x < 0)
                for (auto& y : v) y = -y;
            break;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

IMatrix identity_matrix(std::size_t n) {
    IMatrix m(n, IVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IMatrix multiply(const IMatrix& a, const IMatrix& b) {
    std::size_t inner = b.size();
    std::size_t cols = b.empty() ? 0 : b[0].size();
    IMatrix c(a.size(), IVec(cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) c[i][j] = checked_add(c[i][j], checked_mul(a[i][k], b[k][j]));
        }
    return c;
}

IVec multiply(const IMatrix& a, const IVec& x) {
    IVec y(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) y[i] = checked_add(y[i], checked_mul(a[i][j], x[j]));
    return y;
}

RVec multiply(const IMatrix& a, const RVec& x) {
    RVec y(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) y[i] = dot(a[i], x);
    return y;
}

IMatrix transpose(const IMatrix& a) {
    if (a.empty()) return {};
    IMatrix t(a[0].size(), IVec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

IMatrix unimodular_inverse(const IMatrix& a) {
    std::size_t n = a.size();
    RMatrix aug = to_rmatrix(a);
    for (std::size_t i = 0; i < n; ++i) {
        aug[i].resize(2 * n, Rational(0));
        aug[i][n + i] = 1;
    }
    auto piv = rref(aug, n);
    if (piv.size() != n) throw Error("matrix is singular");
    IMatrix inv(n, IVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& q = aug[i][n + j];
            if (!is_integer(q)) throw Error("matrix is not unimodular");
            inv[i][j] = to_int64(q.get_num());
        }
    return inv;
}

SmithForm smith_normal_form(const IMatrix& a) {
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    SmithForm f{a, identity_matrix(rows), identity_matrix(cols)};
    auto& d = f.d;
    auto row_op = [&](std::size_t r1, std::size_t r2, std::int64_t p, std::int64_t q, std::int64_t r,
                      std::int64_t s) {
        for (auto* m : {&d, &f.u}) {
            auto& mm = *m;
            for (std::size_t j = 0; j < mm[r1].size(); ++j) {
                std::int64_t x = mm[r1][j], y = mm[r2][j];
                mm[r1][j] = checked_add(checked_mul(p, x), checked_mul(q, y));
                mm[r2][j] = checked_add(checked_mul(r, x), checked_mul(s, y));
            }
        }
    };
    auto col_op = [&](std::size_t c1, std::size_t c2, std::int64_t p, std::int64_t q, std::int64_t r,
                      std::int64_t s) {
        for (auto* m : {&d, &f.v}) {
            for (auto& row : *m) {
                std::int64_t x = row[c1], y = row[c2];
                row[c1] = checked_add(checked_mul(p, x), checked_mul(q, y));
                row[c2] = checked_add(checked_mul(r, x), checked_mul(s, y));
            }
        }
    };
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // Bring a nonzero entry to (t,t).
        bool found = false;
        for (std::size_t i = t; i < rows && !found; ++i)
            for (std::size_t j = t; j < cols && !found; ++j)
                if (d[i][j] != 0) {
                    if (i != t) row_op(t, i, 0, 1, 1, 0);
                    if (j != t) col_op(t, j, 0, 1, 1, 0);
                    found = true;
                }
        if (!found) break;
        for (;;) {
            bool changed = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (d[i][t] == 0) continue;
                std::int64_t s, q;
                std::int64_t g = ext_gcd(d[t][t], d[i][t], s, q);
                row_op(t, i, s, q, -d[i][t] / g, d[t][t] / g);
                changed = true;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (d[t][j] == 0) continue;
                std::int64_t s, q;
                std::int64_t g = ext_gcd(d[t][t], d[t][j], s, q);
                col_op(t, j, s, q, -d[t][j] / g, d[t][t] / g);
                changed = true;
            }
            if (changed) continue;
            // Divisibility: fold any non-multiple row into row t.
            bool fixed = true;
            for (std::size_t i = t + 1; i < rows && fixed; ++i)
                for (std::size_t j = t + 1; j < cols && fixed; ++j)
                    if (d[i][j] % d[t][t] != 0) {
                        row_op(t, i, 1, 1, 0, 1);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (d[t][t] < 0) row_op(t, t, -1, 0, 0, -1);
    }
    return f;
}

}  // namespace explograph
