#include "matfun.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

namespace rcg::matfun {
namespace {

// Applies f to the eigenvalues and reconstructs V diag(f(lambda)) V^T,
// symmetrized against roundoff.
Matrix spectral_map(const EigDecomposition& eig, double (*f)(double)) {
  Vector mapped = eig.values.unaryExpr([f](double v) { return f(v); });
  Matrix out = eig.vectors * mapped.asDiagonal() * eig.vectors.transpose();
  return 0.5 * (out + out.transpose());
}

// Locates the pivot at which a textbook Cholesky pass breaks down; only used
// to produce a useful error message after the solver reports failure.
int failing_pivot(const Matrix& a) {
  const Eigen::Index n = a.rows();
  Matrix l = Matrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    double d = a(j, j) - l.row(j).head(j).squaredNorm();
    if (!(d > 0.0) || !std::isfinite(d)) return static_cast<int>(j);
    l(j, j) = std::sqrt(d);
    for (Eigen::Index i = j + 1; i < n; ++i)
      l(i, j) = (a(i, j) - l.row(i).head(j).dot(l.row(j).head(j))) / l(j, j);
  }
  return static_cast<int>(n - 1);
}

}  // namespace

Matrix symmetrize_checked(const Matrix& a) {
  if (a.rows() != a.cols())
    throw ValidationError("matrix is not square: " + std::to_string(a.rows()) +
                          "x" + std::to_string(a.cols()));
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < a.cols(); ++j) {
      const double tol = kSymmetryTol * std::max(1.0, std::abs(a(i, j)));
      if (std::abs(a(i, j) - a(j, i)) > tol)
        throw ValidationError(
            "matrix is not symmetric at (" + std::to_string(i) + "," +
            std::to_string(j) + "): " + std::to_string(a(i, j)) + " vs " +
            std::to_string(a(j, i)));
    }
  }
  return 0.5 * (a + a.transpose());
}

EigDecomposition sym_eig(const Matrix& a) {
  const Matrix sym = symmetrize_checked(a);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success)
    throw NumericError("eigendecomposition failed to converge");
  // Eigen returns ascending order; flip to descending.
  EigDecomposition out;
  out.values = solver.eigenvalues().reverse();
  out.vectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

double pd_threshold(const Vector& descending_values) {
  return kPdFloorRel * descending_values(0);
}

void require_pd(const EigDecomposition& eig, const char* what) {
  const double min_ev = eig.values(eig.values.size() - 1);
  const double threshold = pd_threshold(eig.values);
  if (!(min_ev > threshold) || !(min_ev > 0.0))
    throw NotPositiveDefiniteError(
        std::string(what) + ": matrix is not positive definite (min "
        "eigenvalue " + std::to_string(min_ev) + ", threshold " +
        std::to_string(threshold) + ")",
        min_ev, threshold);
}

Matrix mat_exp_sym(const Matrix& a) {
  const EigDecomposition eig = sym_eig(a);
  static const double max_exp_arg = std::log(std::numeric_limits<double>::max());
  if (eig.values(0) > max_exp_arg)
    throw NumericError("matrix exponential overflows: max eigenvalue " +
                       std::to_string(eig.values(0)));
  return spectral_map(eig, [](double v) { return std::exp(v); });
}

Matrix mat_log_spd(const Matrix& p) {
  const EigDecomposition eig = sym_eig(p);
  require_pd(eig, "mat_log_spd");
  return spectral_map(eig, [](double v) { return std::log(v); });
}

Matrix sqrt_spd(const Matrix& p) {
  const EigDecomposition eig = sym_eig(p);
  require_pd(eig, "sqrt_spd");
  return spectral_map(eig, [](double v) { return std::sqrt(v); });
}

Matrix inv_sqrt_spd(const Matrix& p) {
  const EigDecomposition eig = sym_eig(p);
  require_pd(eig, "inv_sqrt_spd");
  return spectral_map(eig, [](double v) { return 1.0 / std::sqrt(v); });
}

Matrix cholesky_lower(const Matrix& p) {
  const Matrix sym = symmetrize_checked(p);
  Eigen::LLT<Matrix> llt(sym);
  if (llt.info() != Eigen::Success)
    throw DecompositionError(
        "Cholesky decomposition failed at pivot " +
            std::to_string(failing_pivot(sym)) + ": matrix is not PD",
        failing_pivot(sym));
  return llt.matrixL();
}

Matrix floor_eigenvalues(const Matrix& a, double floor) {
  const EigDecomposition eig = sym_eig(a);
  double lo = floor;
  if (lo < 0.0) lo = std::max(pd_threshold(eig.values), 1e-12);
  Vector lifted = eig.values.cwiseMax(lo);
  Matrix out = eig.vectors * lifted.asDiagonal() * eig.vectors.transpose();
  return 0.5 * (out + out.transpose());
}

}  // namespace rcg::matfun
