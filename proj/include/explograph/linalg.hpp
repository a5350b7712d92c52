#pragma once

// Exact linear algebra over Q and Z.

#include <optional>
#include <vector>

#include "explograph/rational.hpp"

namespace explograph {

using RMatrix = std::vector<RVec>;  // row-major
using IMatrix = std::vector<IVec>;  // row-major

std::int64_t gcd_of(const IVec& v);
IVec primitive(const IVec& v);  // v / gcd; zero stays zero

std::size_t rank(RMatrix m);
std::size_t rank(const IMatrix& m);

// Unique solution of A x = b, or nullopt when the system is inconsistent or
// underdetermined.
std::optional<RVec> solve_unique(RMatrix a, RVec b);

// Solution status of a linear system.
enum class SolveKind { Unique, None, Infinite };
struct SolveResult {
    SolveKind kind;
    RVec x;  // valid when kind == Unique
};
SolveResult solve(RMatrix a, RVec b);

// Basis of the rational nullspace of A (columns as vectors).
std::vector<RVec> nullspace(RMatrix a, std::size_t cols);

Rational determinant(RMatrix m);
Integer determinant(const IMatrix& m);

// Lattice basis of {x ∈ Z^n : A x = 0}. Computed by column-style Hermite
// reduction with a fixed pivot rule, so the output is reproducible; each
// basis vector is normalized to a positive first nonzero entry.
std::vector<IVec> integer_kernel_basis(const IMatrix& a, std::size_t cols);

struct SmithForm {
    IMatrix d;  // diagonal, d[i][i] | d[i+1][i+1], nonnegative
    IMatrix u;  // unimodular, rows x rows
    IMatrix v;  // unimodular, cols x cols; u * a * v == d
};
SmithForm smith_normal_form(const IMatrix& a);

IMatrix identity_matrix(std::size_t n);
IMatrix multiply(const IMatrix& a, const IMatrix& b);
IVec multiply(const IMatrix& a, const IVec& x);
RVec multiply(const IMatrix& a, const RVec& x);
IMatrix transpose(const IMatrix& a);

// Inverse of a unimodular integer matrix; throws if |det| != 1.
IMatrix unimodular_inverse(const IMatrix& a);

}  // namespace explograph
