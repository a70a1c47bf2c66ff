#pragma once

#include "conelab/matrix.hpp"

#include <optional>

namespace conelab::linalg {

/// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& m);
Rational determinant(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Exact inverse; std::nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);
std::optional<RatMatrix> inverse(const IntMatrix& m);

/// Inverse of a unimodular integer matrix. Throws InvalidInput otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Solves m x = b; std::nullopt when inconsistent. Free variables are set to zero.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);

/// Reduced row echelon form computed in place; returns pivot columns.
std::vector<std::size_t> row_reduce(RatMatrix& m);

/// Basis of {x in Z^n : A x = 0} as the columns of an n x k matrix. The
/// basis is saturated: it spans the kernel over Z, not only over Q.
IntMatrix integer_kernel(const IntMatrix& a);

/// Smith normal form U * A * V = D with U, V unimodular and D diagonal,
/// nonnegative, with d_1 | d_2 | ... .
struct SmithForm {
  IntMatrix left;      // U
  IntMatrix diagonal;  // D
  IntMatrix right;     // V
  std::vector<Int> invariant_factors() const;  // diagonal, including ones and zeros
};
SmithForm smith_normal_form(const IntMatrix& a);

/// Characteristic polynomial det(x I - m), coefficients from degree 0 upward.
std::vector<Int> characteristic_polynomial(const IntMatrix& m);

/// Matrix power by repeated squaring.
IntMatrix power(const IntMatrix& m, unsigned exponent);

/// Evaluates a polynomial (coefficients from degree 0) at a square matrix.
IntMatrix evaluate(const std::vector<Int>& poly, const IntMatrix& m);

/// Sylvester signature (positive, negative, zero) of a symmetric rational
/// matrix by congruence diagonalization. Pivots are searched in index order.
struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};
Inertia inertia(RatMatrix symmetric);

/// Rational LDL^T data for a positive definite form: form(x) =
/// sum_i diag[i] * (x_i + sum_{j>i} upper(i, j) x_j)^2.
struct Cholesky {
  RatVector diag;
  RatMatrix upper;
};
/// Throws NotPositiveDefinite when the form is not positive definite.
Cholesky rational_cholesky(const RatMatrix& form);

}  // namespace conelab::linalg
