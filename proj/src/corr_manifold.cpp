#include "corr_manifold.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include <Eigen/Eigenvalues>

#include "matfun.hpp"
#include "parallel.hpp"
#include "spd_manifold.hpp"

namespace rcg::corr {
namespace {

constexpr double kBoundaryClamp = 0.999;

void require_same_dim(const CorrPoint& a, const CorrPoint& b,
                      const char* what) {
  if (a.dim() != b.dim())
    throw ValidationError(std::string(what) + ": dimension mismatch (" +
                          std::to_string(a.dim()) + " vs " +
                          std::to_string(b.dim()) + ")");
}

// The fiber optimization's Hessian degenerates at the elliptope boundary;
// entries beyond |rho| = 0.999 are pulled back, and the matrix repaired to PD
// if the clamp broke it.
Matrix clamp_near_boundary(const Matrix& c, bool* clamped) {
  Matrix out = c;
  bool touched = false;
  for (Eigen::Index i = 0; i < out.rows(); ++i)
    for (Eigen::Index j = 0; j < out.cols(); ++j)
      if (i != j && std::abs(out(i, j)) > kBoundaryClamp) {
        out(i, j) = out(i, j) > 0 ? kBoundaryClamp : -kBoundaryClamp;
        touched = true;
      }
  if (touched) {
    Eigen::SelfAdjointEigenSolver<Matrix> eig(out);
    if (eig.eigenvalues()(0) <= 1e-6)
      out = project_to_corr_raw(matfun::floor_eigenvalues(out, 1e-6));
    *clamped = true;
  }
  return out;
}

// d^2_{Sym+}(base, D other D) evaluated as sum log^2 of the eigenvalues of
// the whitened representative.
double fiber_objective(const Matrix& base_inv_sqrt, const Matrix& other,
                       const Vector& d) {
  const Matrix rep = d.asDiagonal() * other * d.asDiagonal();
  Eigen::SelfAdjointEigenSolver<Matrix> eig(base_inv_sqrt * rep *
                                            base_inv_sqrt);
  double obj = 0.0;
  for (Eigen::Index k = 0; k < eig.eigenvalues().size(); ++k) {
    const double lambda = eig.eigenvalues()(k);
    if (!(lambda > 0.0))
      throw NumericError("fiber_optimize: representative left the cone");
    const double lg = std::log(lambda);
    obj += lg * lg;
  }
  return obj;
}

}  // namespace

Matrix project_to_corr_raw(const Matrix& spd) {
  Vector d = spd.diagonal().cwiseSqrt().cwiseInverse();
  Matrix out = d.asDiagonal() * spd * d.asDiagonal();
  out = 0.5 * (out + out.transpose());
  out.diagonal().setOnes();
  return out;
}

CorrPoint project_to_corr(const SpdPoint& s) {
  return CorrPoint::trusted(project_to_corr_raw(s.matrix()));
}

FiberResult fiber_optimize(const CorrPoint& base, const CorrPoint& other,
                           const FiberOptions& opts,
                           const Vector* warm_start) {
  require_same_dim(base, other, "fiber_optimize");
  if (!(opts.delta > 0.0))
    throw ValidationError("fiber_optimize: delta must be > 0");
  const int p = base.dim();

  FiberResult result;
  const Matrix c = clamp_near_boundary(base.matrix(), &result.boundary_clamped);
  const Matrix ci =
      clamp_near_boundary(other.matrix(), &result.boundary_clamped);

  const Matrix c_inv = c.inverse();
  const Matrix c_inv_sqrt = matfun::inv_sqrt_spd(c);
  const Matrix ci_sqrt = matfun::sqrt_spd(ci);
  const Matrix ci_inv_sqrt = matfun::inv_sqrt_spd(ci);

  Vector d = warm_start ? *warm_start : Vector::Ones(p);
  if (warm_start && (d.size() != p || !(d.minCoeff() > 0.0)))
    throw ValidationError("fiber_optimize: invalid warm start");
  double objective = fiber_objective(c_inv_sqrt, ci, d);

  for (int iter = 0; iter < opts.max_iter; ++iter) {
    // Delta = I o 2 Sym[D Log(N)] with N = other (D base^{-1} D); N is
    // similar to an SPD matrix, so its log is taken through that similarity.
    Matrix t = ci_sqrt * d.asDiagonal() * c_inv * d.asDiagonal() * ci_sqrt;
    t = 0.5 * (t + t.transpose());
    const Matrix log_n = ci_sqrt * matfun::mat_log_spd(t) * ci_inv_sqrt;
    Vector grad = 2.0 * d.cwiseProduct(log_n.diagonal());

    result.iterations = iter;
    result.grad_norm = grad.norm();
    if (result.grad_norm <= opts.tol) {
      result.scaling = d;
      result.objective = objective;
      return result;
    }

    // Backtracking on the multiplicative update D <- D Exp(-step D^{-1} Delta).
    double step = opts.delta;
    bool accepted = false;
    for (int halving = 0; halving <= 20; ++halving) {
      Vector trial = d.array() * (-step * grad.array() / d.array()).exp();
      const double trial_obj = fiber_objective(c_inv_sqrt, ci, trial);
      if (trial_obj <= objective + 1e-12 * std::max(1.0, objective)) {
        d = std::move(trial);
        objective = trial_obj;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;  // step stalled at numerical noise floor
  }

  Matrix last = Matrix(d.asDiagonal());
  throw ConvergenceError(
      "fiber_optimize: gradient norm " + std::to_string(result.grad_norm) +
          " above tolerance " + std::to_string(opts.tol) + " after " +
          std::to_string(result.iterations + 1) + " iterations",
      last, result.grad_norm);
}

double dist_one_sided(const CorrPoint& from, const CorrPoint& to,
                      const FiberOptions& opts) {
  return std::sqrt(fiber_optimize(from, to, opts).objective);
}

double dist(const CorrPoint& c1, const CorrPoint& c2,
            const DistOptions& opts) {
  require_same_dim(c1, c2, "dist_corr");
  const double forward = dist_one_sided(c1, c2, opts.fiber);
  if (!opts.symmetrize) return forward;
  const double backward = dist_one_sided(c2, c1, opts.fiber);
  return std::min(forward, backward);
}

CorrPoint geodesic(const CorrPoint& c1, const CorrPoint& c2, double t,
                   const FiberOptions& opts) {
  require_same_dim(c1, c2, "geodesic_corr");
  if (!(t >= 0.0 && t <= 1.0))
    throw ValidationError("geodesic_corr: t = " + std::to_string(t) +
                          " outside [0, 1]");
  const FiberResult fiber = fiber_optimize(c1, c2, opts);
  const Matrix rep = fiber.scaling.asDiagonal() * c2.matrix() *
                     fiber.scaling.asDiagonal();
  const Matrix dir = spd::log_map_raw(c1.matrix(), rep);
  return CorrPoint::trusted(
      project_to_corr_raw(spd::exp_map_raw(c1.matrix(), t * dir)));
}

CorrPoint frechet_mean_weighted(std::span<const CorrPoint> points,
                                std::span<const double> weights,
                                const MeanOptions& opts) {
  if (points.empty())
    throw ValidationError("frechet_mean_corr_weighted: no input points");
  if (points.size() != weights.size())
    throw ValidationError("frechet_mean_corr_weighted: " +
                          std::to_string(points.size()) + " points but " +
                          std::to_string(weights.size()) + " weights");
  const int p = points[0].dim();
  double wsum = 0.0;
  bool all_positive = true;
  for (size_t i = 0; i < points.size(); ++i) {
    if (points[i].dim() != p)
      throw ValidationError(
          "frechet_mean_corr_weighted: dimension mismatch at point " +
          std::to_string(i));
    wsum += weights[i];
    if (!(weights[i] > 0.0)) all_positive = false;
  }
  if (std::abs(wsum - 1.0) > 1e-9)
    throw ValidationError("frechet_mean_corr_weighted: weights sum to " +
                          std::to_string(wsum) + ", expected 1");

  Matrix init = Matrix::Zero(p, p);
  if (all_positive) {
    for (size_t i = 0; i < points.size(); ++i)
      init += weights[i] * points[i].matrix();
  } else {
    for (const auto& c : points) init += c.matrix();
    init /= static_cast<double>(points.size());
    init = matfun::floor_eigenvalues(init);
  }
  Matrix current = project_to_corr_raw(init);

  const int k = static_cast<int>(points.size());
  std::vector<Vector> warm(k, Vector::Ones(p));
  std::vector<FiberResult> fibers(k);

  double residual = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < opts.max_iter; ++iter) {
    const CorrPoint iterate = CorrPoint::trusted(current);
    parallel_for(k, opts.threads, [&](int i) {
      fibers[i] = fiber_optimize(iterate, points[i], opts.fiber, &warm[i]);
      warm[i] = fibers[i].scaling;
    });

    if (opts.objective_trace) {
      double obj = 0.0;
      for (int i = 0; i < k; ++i) obj += weights[i] * fibers[i].objective;
      opts.objective_trace->push_back(obj);
    }

    // Tangent-space mean in Sym+ over the optimal representatives, fixed
    // index order so results do not depend on thread scheduling.
    Matrix tangent_mean = Matrix::Zero(p, p);
    for (int i = 0; i < k; ++i) {
      const Matrix rep = fibers[i].scaling.asDiagonal() * points[i].matrix() *
                         fibers[i].scaling.asDiagonal();
      tangent_mean += weights[i] * spd::log_map_raw(current, rep);
    }
    residual = tangent_mean.norm();

    current = project_to_corr_raw(spd::exp_map_raw(current, tangent_mean));
    if (residual < opts.eps) return CorrPoint::trusted(current);
  }
  throw ConvergenceError(
      "frechet_mean_corr_weighted: no convergence after " +
          std::to_string(opts.max_iter) + " outer iterations (residual " +
          std::to_string(residual) + ")",
      current, residual);
}

}  // namespace rcg::corr
