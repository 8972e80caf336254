#pragma once

#include <vector>

#include "framecert/matrix.hpp"

namespace framecert {

// Float-mode decisions compare magnitudes against tau scaled by the
// largest absolute entry of the matrix under test.
struct TolerancePolicy {
  double tau = 1e-9;
};

struct SingularMatrixError : Error {
  SingularMatrixError(const std::string& what, std::vector<Vec> witness)
      : Error(what), nullspace_witness(std::move(witness)) {}
  std::vector<Vec> nullspace_witness;
};

// Determinant by fraction-free (Bareiss) elimination; exact kinds only.
Scalar det_exact(const Matrix& m);

// Rank: fraction-free elimination for exact kinds, thresholded partial
// pivoting for float64.
int rank_of(const Matrix& m, const TolerancePolicy& tol = {});

// Reduced row echelon form; exact kinds only. Pivot columns are
// reported in order when requested.
Matrix rref_exact(const Matrix& m, std::vector<int>* pivot_cols = nullptr);

// Right null space basis from the RREF, one vector per free column,
// each scaled so its first nonzero coordinate is 1.
std::vector<Vec> nullspace_exact(const Matrix& m);

// Solve m x = b for square m; throws SingularMatrixError carrying a
// null-space witness when m is singular.
Vec solve_exact(const Matrix& m, const Vec& b);

Matrix inverse_exact(const Matrix& m);

// Eigenvalues of a real symmetric matrix (doubles) by cyclic Jacobi,
// ascending. Small dense use only.
std::vector<double> symmetric_eigenvalues(const Matrix& m,
                                          const TolerancePolicy& tol = {});

}  // namespace framecert
