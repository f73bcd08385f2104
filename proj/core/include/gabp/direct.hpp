#pragma once

#include "gabp/sparse_matrix.hpp"
#include "gabp/types.hpp"

namespace gabp {

/// Dense LU solve with partial pivoting plus one step of iterative
/// refinement. Ground truth for every iterative method in this library.
/// Throws SingularMatrixError when a pivot magnitude falls below 1e-12.
Vector direct_solve(const SymmetricSparseMatrix& A, const Vector& b);

/// q(x) = x^T A x / 2 - b^T x. The solution of A x = b is its stationary point.
double quadratic_form(const SymmetricSparseMatrix& A, const Vector& b, const Vector& x);

}  // namespace gabp
