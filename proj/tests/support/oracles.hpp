#pragma once

// Independent reference implementations used only by tests. These
// deliberately avoid the production code paths they check: the matrix
// exponential uses scaling-and-squaring instead of eigendecomposition, the
// Cholesky oracle is a plain Doolittle-style loop nest, kriging is solved in
// variogram form, and the correlation distance is found by grid search over
// the fiber.

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Matrix exponential by scaling-and-squaring with a truncated Taylor series.
Matrix expm_scaling_squaring(const Matrix& a);

// Textbook Doolittle-style Cholesky, entry by entry.
Matrix cholesky_textbook(const Matrix& a);

// Affine-invariant distance via the generalized eigenvalues of (p1, p2),
// solved on p1^{-1} p2 with a general (non-selfadjoint) eigensolver.
double spd_distance_geneig(const Matrix& p1, const Matrix& p2);

// Quotient distance on Corr(p) by brute force over the fiber of c2.
// Two modes: a full 2-D grid over diag(d1, d2) (p = 2 only), and a 1-D grid
// that exploits the first-order condition det(D)^2 = det(c1)/det(c2).
double corr_distance_grid2d(const Matrix& c1, const Matrix& c2, double lo,
                            double hi, double step);
double corr_distance_grid1d(const Matrix& c1, const Matrix& c2, double lo,
                            double hi, double step);

// Ordinary kriging weights from the variogram-form system
// [gamma(ui,uj) 1; 1 0] [w; mu] = [gamma(ui,u0); 1].
Vector ok_weights_gamma_form(const std::vector<std::array<double, 3>>& pts,
                             const std::array<double, 3>& target,
                             double nugget, double sill, double range);

// Inverse standard normal CDF by bisection on erfc; ~1e-14 absolute.
double normal_quantile_bisect(double p);

// Two-sample Kolmogorov-Smirnov statistic and its asymptotic p-value.
double ks_statistic(std::vector<double> a, std::vector<double> b);
double ks_pvalue(double statistic, std::size_t na, std::size_t nb);

// Seeded random SPD / correlation matrices for property tests.
Matrix random_spd(int p, std::mt19937_64& rng, double spread = 1.0);
Matrix random_corr(int p, std::mt19937_64& rng);

// Corr(2) matrix with off-diagonal x.
Matrix corr2(double x);

}  // namespace oracle
