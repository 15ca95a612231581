#pragma once

#include <span>
#include <vector>

#include "manifold_points.hpp"

// The affine-invariant Riemannian geometry of Sym+(p):
//
//   d(P1, P2)      = || Log(P1^{-1/2} P2 P1^{-1/2}) ||_F
//   exp_P(Y)       = P^{1/2} Exp(P^{-1/2} Y P^{-1/2}) P^{1/2}
//   log_P(X)       = P^{1/2} Log(P^{-1/2} X P^{-1/2}) P^{1/2}
//   geodesic(t)    = P^{1/2} Exp(t P^{-1/2} Y P^{-1/2}) P^{1/2}
//
// The metric is invariant under congruence P -> G P G^T for invertible G.
namespace rcg::spd {

double dist(const SpdPoint& p1, const SpdPoint& p2);
SpdPoint exp_map(const SpdPoint& base, const TangentVector& y);
TangentVector log_map(const SpdPoint& base, const SpdPoint& target);
SpdPoint geodesic(const SpdPoint& base, const TangentVector& y, double t);

// Raw-matrix kernels shared with the correlation-manifold inner loops. The
// caller guarantees SPD inputs.
double dist_raw(const Matrix& p1, const Matrix& p2);
Matrix log_map_raw(const Matrix& base, const Matrix& target);
Matrix exp_map_raw(const Matrix& base, const Matrix& direction);

struct FrechetOptions {
  double eps = 1e-9;  // Frobenius norm of the tangent-space mean at exit
  int max_iter = 200;
  // When set, receives the residual ||Pbar||_F of every iteration.
  std::vector<double>* residual_trace = nullptr;
};

// Fixed-point iteration for the weighted Frechet (Karcher) mean: project the
// observations to the tangent space at the iterate, average with the given
// weights, and exponentiate back, until the tangent mean norm drops below
// eps. Weights must sum to 1; negative weights (ordinary kriging can produce
// them) are allowed and only change the initializer.
SpdPoint frechet_mean_weighted(std::span<const SpdPoint> points,
                               std::span<const double> weights,
                               const FrechetOptions& opts = {});

}  // namespace rcg::spd
