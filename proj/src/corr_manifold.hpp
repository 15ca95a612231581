#pragma once

#include <span>
#include <vector>

#include "manifold_points.hpp"

// Corr(p) realized as the quotient Sym+(p) / Diag+(p). A correlation matrix
// stands for its fiber { D C D : D positive diagonal }; distances and
// geodesics are computed by finding the representative of the far endpoint's
// fiber that is closest to the near endpoint in the ambient affine-invariant
// metric, then working in Sym+(p).
namespace rcg::corr {

// Quotient projection pi(S) = D S D with D = (I o S)^{-1/2}; the result's
// diagonal is set to exactly 1. Idempotent, identity on correlation matrices.
CorrPoint project_to_corr(const SpdPoint& s);
Matrix project_to_corr_raw(const Matrix& spd);

struct FiberOptions {
  double delta = 0.1;   // gradient step, halved (up to 20x) on ascent
  double tol = 1e-8;    // exit when ||Delta||_F <= tol
  int max_iter = 500;
};

struct FiberResult {
  Vector scaling;           // diagonal of the optimal D
  double objective;         // d^2_{Sym+}(base, D* other D*)
  double grad_norm;         // ||Delta||_F at exit
  int iterations = 0;
  bool boundary_clamped = false;  // inputs were clamped away from |rho|=1
};

// Minimizes g(D) = d^2_{Sym+}(base, D other D) over positive diagonal D by
// gradient descent in log-diagonal coordinates:
//
//   Delta = I o 2 Sym[ D Log(other D base^{-1} D) ],   D <- D Exp(-delta D^{-1} Delta)
//
// starting from D = I (or `warm_start`). The accepted objective sequence is
// non-increasing.
FiberResult fiber_optimize(const CorrPoint& base, const CorrPoint& other,
                           const FiberOptions& opts = {},
                           const Vector* warm_start = nullptr);

// One-sided quotient distance d(from, to) = d_{Sym+}(from, D* to D*).
double dist_one_sided(const CorrPoint& from, const CorrPoint& to,
                      const FiberOptions& opts = {});

// Quotient distance. The exact distance is symmetric; finite optimization
// makes the two one-sided runs differ slightly, so the default reports the
// smaller of the two. Set symmetrize = false for the raw one-sided value.
struct DistOptions {
  bool symmetrize = true;
  FiberOptions fiber;
};
double dist(const CorrPoint& c1, const CorrPoint& c2,
            const DistOptions& opts = {});

// Quotient geodesic: the projection of the Sym+ geodesic from c1 to the
// optimal representative D* c2 D*. t in [0, 1].
CorrPoint geodesic(const CorrPoint& c1, const CorrPoint& c2, double t,
                   const FiberOptions& opts = {});

struct MeanOptions {
  FiberOptions fiber;
  // Frobenius norm of the tangent mean at exit. The tangent mean is
  // horizontal only up to the fiber gradient tolerance, so eps below
  // ~10x fiber.tol is unreachable.
  double eps = 1e-7;
  int max_iter = 200;  // outer iterations
  int threads = 1;     // fiber optimizations per outer iteration run in parallel
  // When set, receives sum_i w_i d^2_corr(C_i, C_t) for each outer iterate.
  std::vector<double>* objective_trace = nullptr;
};

// Weighted Frechet mean on Corr(p). Each outer iteration keeps the iterate
// fixed, optimizes along every observation's fiber (warm-started from the
// previous iteration), averages the fiber representatives in the tangent
// space of Sym+(p), exponentiates, and projects back to Corr(p).
CorrPoint frechet_mean_weighted(std::span<const CorrPoint> points,
                                std::span<const double> weights,
                                const MeanOptions& opts = {});

}  // namespace rcg::corr
