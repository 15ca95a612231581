#include "spd_manifold.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "matfun.hpp"

namespace rcg::spd {
namespace {

void require_same_dim(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows())
    throw ValidationError(std::string(what) + ": dimension mismatch (" +
                          std::to_string(a.rows()) + " vs " +
                          std::to_string(b.rows()) + ")");
}

void require_base_match(const SpdPoint& p, const TangentVector& y,
                        const char* what) {
  require_same_dim(p.matrix(), y.base.matrix(), what);
  const double scale = std::max(1.0, p.matrix().norm());
  if ((p.matrix() - y.base.matrix()).norm() > 1e-10 * scale)
    throw ValidationError(std::string(what) +
                          ": tangent vector is anchored at a different base "
                          "point");
}

}  // namespace

namespace {

// Whitened products are symmetric in exact arithmetic; pin that down against
// roundoff before they reach the eigensolver.
Matrix sym(const Matrix& a) { return 0.5 * (a + a.transpose()); }

}  // namespace

double dist_raw(const Matrix& p1, const Matrix& p2) {
  const Matrix w = matfun::inv_sqrt_spd(p1);
  return matfun::mat_log_spd(sym(w * p2 * w)).norm();
}

Matrix log_map_raw(const Matrix& base, const Matrix& target) {
  const Matrix h = matfun::sqrt_spd(base);
  const Matrix w = matfun::inv_sqrt_spd(base);
  return sym(h * matfun::mat_log_spd(sym(w * target * w)) * h);
}

Matrix exp_map_raw(const Matrix& base, const Matrix& direction) {
  const Matrix h = matfun::sqrt_spd(base);
  const Matrix w = matfun::inv_sqrt_spd(base);
  return sym(h * matfun::mat_exp_sym(sym(w * direction * w)) * h);
}

double dist(const SpdPoint& p1, const SpdPoint& p2) {
  require_same_dim(p1.matrix(), p2.matrix(), "dist_spd");
  return dist_raw(p1.matrix(), p2.matrix());
}

SpdPoint exp_map(const SpdPoint& base, const TangentVector& y) {
  require_base_match(base, y, "exp_map");
  const Matrix dir = matfun::symmetrize_checked(y.direction);
  return SpdPoint::trusted(exp_map_raw(base.matrix(), dir));
}

TangentVector log_map(const SpdPoint& base, const SpdPoint& target) {
  require_same_dim(base.matrix(), target.matrix(), "log_map");
  return TangentVector{base, log_map_raw(base.matrix(), target.matrix())};
}

SpdPoint geodesic(const SpdPoint& base, const TangentVector& y, double t) {
  require_base_match(base, y, "geodesic");
  const Matrix dir = matfun::symmetrize_checked(y.direction);
  return SpdPoint::trusted(exp_map_raw(base.matrix(), t * dir));
}

SpdPoint frechet_mean_weighted(std::span<const SpdPoint> points,
                               std::span<const double> weights,
                               const FrechetOptions& opts) {
  if (points.empty())
    throw ValidationError("frechet_mean_weighted: no input points");
  if (points.size() != weights.size())
    throw ValidationError("frechet_mean_weighted: " +
                          std::to_string(points.size()) + " points but " +
                          std::to_string(weights.size()) + " weights");
  if (!(opts.eps > 0.0))
    throw ValidationError("frechet_mean_weighted: eps must be > 0");
  const int dim = points[0].dim();
  double wsum = 0.0;
  bool all_positive = true;
  for (size_t i = 0; i < points.size(); ++i) {
    if (points[i].dim() != dim)
      throw ValidationError("frechet_mean_weighted: dimension mismatch at "
                            "point " + std::to_string(i));
    wsum += weights[i];
    if (!(weights[i] > 0.0)) all_positive = false;
  }
  if (std::abs(wsum - 1.0) > 1e-9)
    throw ValidationError("frechet_mean_weighted: weights sum to " +
                          std::to_string(wsum) + ", expected 1");

  // Weighted arithmetic mean initializer as in the fixed-point algorithm;
  // with negative weights that combination may leave the cone, so fall back
  // to the unweighted mean floored to PD.
  Matrix current = Matrix::Zero(dim, dim);
  if (all_positive) {
    for (size_t i = 0; i < points.size(); ++i)
      current += weights[i] * points[i].matrix();
  } else {
    for (const auto& p : points) current += p.matrix();
    current /= static_cast<double>(points.size());
    current = matfun::floor_eigenvalues(current);
  }

  double prev_residual = std::numeric_limits<double>::infinity();
  int residual_increases = 0;
  double residual = prev_residual;
  for (int iter = 0; iter < opts.max_iter; ++iter) {
    Matrix tangent_mean = Matrix::Zero(dim, dim);
    for (size_t i = 0; i < points.size(); ++i)
      tangent_mean += weights[i] * log_map_raw(current, points[i].matrix());
    residual = tangent_mean.norm();
    if (opts.residual_trace) opts.residual_trace->push_back(residual);

    // Pure fixed point; a half step engages only after the residual has
    // increased on two consecutive iterations.
    residual_increases = residual > prev_residual ? residual_increases + 1 : 0;
    const double step = residual_increases >= 2 ? 0.5 : 1.0;
    prev_residual = residual;

    current = exp_map_raw(current, step * tangent_mean);
    if (residual < opts.eps) return SpdPoint::trusted(current);
  }
  throw ConvergenceError(
      "frechet_mean_weighted: no convergence after " +
          std::to_string(opts.max_iter) + " iterations (residual " +
          std::to_string(residual) + ")",
      current, residual);
}

}  // namespace rcg::spd
