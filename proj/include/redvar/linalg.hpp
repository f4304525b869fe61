#pragma once

#include <vector>

#include "redvar/gf.hpp"

namespace redvar {

using Vec = std::vector<fel>;
using Mat = std::vector<Vec>;  // row-major

/// Row echelon form in place; returns pivot columns.
std::vector<int> row_reduce(const Field& F, Mat& A);

int rank(const Field& F, Mat A);

/// Basis of {x : A x = 0}.
Mat nullspace(const Field& F, const Mat& A);

/// Greedy maximal linearly independent subset, keeping input order.
Mat independent_subset(const Field& F, const Mat& rows);

/// Determinant of a square matrix.
fel determinant(const Field& F, Mat A);

/// Solve A x = b; empty optional if inconsistent.
std::optional<Vec> solve(const Field& F, Mat A, Vec b);

fel dot(const Field& F, const Vec& a, const Vec& b);
Vec mat_vec(const Field& F, const Mat& A, const Vec& x);

}  // namespace redvar
