#pragma once

#include "errors.hpp"
#include "linalg.hpp"

// Spectral functions of symmetric matrices. Everything here goes through a
// single eigendecomposition backend; matrices are small (p <= ~10), so no
// Pade/scaling-squaring machinery is used in the production path.
namespace rcg::matfun {

// Relative symmetry tolerance: |a_ij - a_ji| <= kSymmetryTol * max(1, |a_ij|).
inline constexpr double kSymmetryTol = 1e-12;

// A matrix is declared numerically non-PD when its smallest eigenvalue is
// <= kPdFloorRel * (largest eigenvalue). Scale invariant by construction.
inline constexpr double kPdFloorRel = 1e-10;

struct EigDecomposition {
  Vector values;   // descending
  Matrix vectors;  // orthonormal columns, vectors.col(i) pairs with values[i]
};

// Checks the symmetry invariant and removes roundoff drift via (A + A^T)/2.
// Throws ValidationError on genuine asymmetry.
Matrix symmetrize_checked(const Matrix& a);

// Eigendecomposition of a symmetric matrix, eigenvalues descending.
EigDecomposition sym_eig(const Matrix& a);

// Positive-definiteness threshold for a descending eigenvalue vector.
double pd_threshold(const Vector& descending_values);

// Throws NotPositiveDefiniteError unless min eigenvalue > pd_threshold.
void require_pd(const EigDecomposition& eig, const char* what);

Matrix mat_exp_sym(const Matrix& a);
Matrix mat_log_spd(const Matrix& p);
Matrix sqrt_spd(const Matrix& p);
Matrix inv_sqrt_spd(const Matrix& p);

// Lower-triangular Cholesky factor with positive diagonal. Throws
// DecompositionError naming the failing pivot when the input is not PD.
Matrix cholesky_lower(const Matrix& p);

// Symmetrizes and lifts eigenvalues to at least `floor` (or to the relative
// PD threshold when floor < 0). Used to repair nearly-singular inputs.
Matrix floor_eigenvalues(const Matrix& a, double floor = -1.0);

}  // namespace rcg::matfun
