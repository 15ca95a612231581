#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "matfun.hpp"
#include "spd_manifold.hpp"
#include "support/oracles.hpp"

using rcg::Matrix;
using rcg::SpdPoint;
using rcg::TangentVector;
namespace spd = rcg::spd;

namespace {

SpdPoint diag_point(std::initializer_list<double> d) {
  Matrix m = Matrix::Zero(d.size(), d.size());
  int i = 0;
  for (double v : d) m(i, i) = v, ++i;
  return SpdPoint(m);
}

}  // namespace

TEST_CASE("dist_spd: commuting closed forms") {
  std::mt19937_64 rng(1);
  const SpdPoint p = SpdPoint(oracle::random_spd(3, rng));
  CHECK(spd::dist(p, p) == doctest::Approx(0.0).epsilon(1e-12));

  // d(I, e^2 I) = sqrt(sum log^2) = 2 sqrt(2)
  const double e2 = std::exp(2.0);
  CHECK(spd::dist(diag_point({1.0, 1.0}), diag_point({e2, e2})) ==
        doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-10));

  // d(diag(1,4), diag(4,1)) = sqrt(2 ln^2 4)
  CHECK(spd::dist(diag_point({1.0, 4.0}), diag_point({4.0, 1.0})) ==
        doctest::Approx(std::sqrt(2.0) * std::log(4.0)).epsilon(1e-10));
}

TEST_CASE("dist_spd: symmetry, triangle inequality, affine invariance") {
  std::mt19937_64 rng(101);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int p : {2, 3, 6}) {
    for (int rep = 0; rep < 50; ++rep) {
      const SpdPoint a(oracle::random_spd(p, rng));
      const SpdPoint b(oracle::random_spd(p, rng));
      const SpdPoint c(oracle::random_spd(p, rng));
      const double dab = spd::dist(a, b);
      CHECK(std::abs(dab - spd::dist(b, a)) <= 1e-9);
      CHECK(spd::dist(a, c) <= dab + spd::dist(b, c) + 1e-9);

      Matrix g(p, p);
      do {
        for (int i = 0; i < p; ++i)
          for (int j = 0; j < p; ++j) g(i, j) = normal(rng);
      } while (std::abs(g.determinant()) < 1e-3);
      const Matrix gag = g * a.matrix() * g.transpose();
      const Matrix gbg = g * b.matrix() * g.transpose();
      const SpdPoint ga(0.5 * (gag + gag.transpose()));
      const SpdPoint gb(0.5 * (gbg + gbg.transpose()));
      CHECK(std::abs(spd::dist(ga, gb) - dab) <= 1e-8 * std::max(1.0, dab));

      // cross-check against the generalized-eigenvalue oracle
      CHECK(dab ==
            doctest::Approx(oracle::spd_distance_geneig(a.matrix(), b.matrix()))
                .epsilon(1e-8));
    }
  }
}

TEST_CASE("exp_map: zero tangent, base identity, commuting closed form") {
  std::mt19937_64 rng(5);
  const SpdPoint p(oracle::random_spd(3, rng));
  const SpdPoint same =
      spd::exp_map(p, TangentVector{p, Matrix::Zero(3, 3)});
  CHECK((same.matrix() - p.matrix()).norm() < 1e-12);

  Matrix y(2, 2);
  y << 0.3, -0.1, -0.1, 0.5;
  const SpdPoint id = diag_point({1.0, 1.0});
  CHECK((spd::exp_map(id, TangentVector{id, y}).matrix() -
         oracle::expm_scaling_squaring(y)).norm() < 1e-11);

  // Commuting case: P Exp(P^{-1} Y). With P = diag(4,1), Y = diag(4 ln 2, 0)
  // this is diag(8, 1).
  const SpdPoint base = diag_point({4.0, 1.0});
  Matrix dir = Matrix::Zero(2, 2);
  dir(0, 0) = 4.0 * std::log(2.0);
  const SpdPoint moved = spd::exp_map(base, TangentVector{base, dir});
  CHECK(moved.matrix()(0, 0) == doctest::Approx(8.0).epsilon(1e-10));
  CHECK(moved.matrix()(1, 1) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("exp_map: rejects mismatched base") {
  std::mt19937_64 rng(6);
  const SpdPoint p(oracle::random_spd(2, rng));
  const SpdPoint q(oracle::random_spd(2, rng));
  CHECK_THROWS_AS(spd::exp_map(p, TangentVector{q, Matrix::Zero(2, 2)}),
                  rcg::ValidationError);
}

TEST_CASE("log_map: identity cases and roundtrip with exp_map") {
  std::mt19937_64 rng(7);
  const SpdPoint p(oracle::random_spd(3, rng));
  CHECK(spd::log_map(p, p).direction.norm() < 1e-10);

  const SpdPoint id = diag_point({1.0, 1.0, 1.0});
  const SpdPoint x(oracle::random_spd(3, rng));
  const TangentVector at_id = spd::log_map(id, x);
  CHECK((spd::exp_map(id, at_id).matrix() - x.matrix()).norm() < 1e-9);

  for (int p_dim : {2, 3, 6}) {
    for (int rep = 0; rep < 100; ++rep) {
      const SpdPoint a(oracle::random_spd(p_dim, rng));
      const SpdPoint b(oracle::random_spd(p_dim, rng));
      const TangentVector v = spd::log_map(a, b);
      CHECK((spd::exp_map(a, v).matrix() - b.matrix()).norm() <=
            1e-7 * std::max(1.0, b.matrix().norm()));
      // whitened norm of the log equals the distance
      const Matrix w = rcg::matfun::inv_sqrt_spd(a.matrix());
      CHECK(std::abs((w * v.direction * w).norm() - spd::dist(a, b)) <= 1e-9);
    }
  }
}

TEST_CASE("geodesic: endpoints, midpoint, constant speed") {
  std::mt19937_64 rng(8);
  const SpdPoint a(oracle::random_spd(3, rng));
  const SpdPoint b(oracle::random_spd(3, rng));
  const TangentVector v = spd::log_map(a, b);

  CHECK((spd::geodesic(a, v, 0.0).matrix() - a.matrix()).norm() < 1e-12);
  CHECK((spd::geodesic(a, v, 1.0).matrix() - b.matrix()).norm() <=
        1e-7 * std::max(1.0, b.matrix().norm()));

  const SpdPoint mid = spd::geodesic(diag_point({1.0, 1.0}),
                                     spd::log_map(diag_point({1.0, 1.0}),
                                                  diag_point({4.0, 4.0})),
                                     0.5);
  CHECK(mid.matrix()(0, 0) == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(mid.matrix()(1, 1) == doctest::Approx(2.0).epsilon(1e-10));

  const double total = spd::dist(a, b);
  for (double t1 : {0.0, 0.25, 0.7}) {
    for (double t2 : {0.1, 0.5, 1.0}) {
      const double seg =
          spd::dist(spd::geodesic(a, v, t1), spd::geodesic(a, v, t2));
      CHECK(std::abs(seg - std::abs(t2 - t1) * total) <= 1e-6);
    }
  }
}

TEST_CASE("frechet_mean_weighted: trivial and commuting cases") {
  std::mt19937_64 rng(9);
  const SpdPoint p(oracle::random_spd(3, rng));
  const std::vector<SpdPoint> single{p};
  const std::vector<double> w1{1.0};
  CHECK((spd::frechet_mean_weighted(single, w1).matrix() - p.matrix())
            .norm() < 1e-8);

  const std::vector<SpdPoint> twice{p, p};
  const std::vector<double> w2{0.5, 0.5};
  CHECK((spd::frechet_mean_weighted(twice, w2).matrix() - p.matrix())
            .norm() < 1e-8);

  const std::vector<SpdPoint> pair{diag_point({1.0, 1.0}),
                                   diag_point({4.0, 4.0})};
  const SpdPoint mean = spd::frechet_mean_weighted(pair, w2);
  CHECK(mean.matrix()(0, 0) == doctest::Approx(2.0).epsilon(1e-7));
  CHECK(mean.matrix()(1, 1) == doctest::Approx(2.0).epsilon(1e-7));
}

TEST_CASE("frechet_mean_weighted: commuting case equals geometric mean") {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> uni(0.2, 5.0);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<SpdPoint> pts;
    const int k = 3;
    Matrix expected = Matrix::Zero(3, 3);
    for (int i = 0; i < k; ++i) {
      const double a = uni(rng), b = uni(rng), c = uni(rng);
      pts.push_back(diag_point({a, b, c}));
      expected(0, 0) += std::log(a) / k;
      expected(1, 1) += std::log(b) / k;
      expected(2, 2) += std::log(c) / k;
    }
    const std::vector<double> w(k, 1.0 / k);
    const SpdPoint mean = spd::frechet_mean_weighted(pts, w);
    for (int i = 0; i < 3; ++i)
      CHECK(mean.matrix()(i, i) ==
            doctest::Approx(std::exp(expected(i, i))).epsilon(1e-7));
  }
}

TEST_CASE("frechet_mean_weighted: residuals are non-increasing") {
  std::mt19937_64 rng(12);
  for (int rep = 0; rep < 20; ++rep) {
    const int k = rep % 2 == 0 ? 3 : 10;
    std::vector<SpdPoint> pts;
    for (int i = 0; i < k; ++i) pts.emplace_back(oracle::random_spd(3, rng));
    const std::vector<double> w(k, 1.0 / k);
    std::vector<double> trace;
    spd::FrechetOptions opts;
    opts.residual_trace = &trace;
    spd::frechet_mean_weighted(pts, w, opts);
    for (size_t i = 1; i < trace.size(); ++i)
      CHECK(trace[i] <= trace[i - 1] + 1e-12);
  }
}

TEST_CASE("frechet_mean_weighted: negative kriging-style weights converge") {
  std::mt19937_64 rng(14);
  std::vector<SpdPoint> pts;
  for (int i = 0; i < 4; ++i) pts.emplace_back(oracle::random_spd(3, rng, 0.3));
  const std::vector<double> w{0.6, 0.5, 0.1, -0.2};
  const SpdPoint mean = spd::frechet_mean_weighted(pts, w);
  // stationarity: the weighted tangent mean at the result is ~0
  Matrix tm = Matrix::Zero(3, 3);
  for (size_t i = 0; i < pts.size(); ++i)
    tm += w[i] * spd::log_map(mean, pts[i]).direction;
  CHECK(tm.norm() < 1e-8);
}

TEST_CASE("frechet_mean_weighted: input validation") {
  std::mt19937_64 rng(15);
  const SpdPoint p(oracle::random_spd(2, rng));
  const std::vector<SpdPoint> pts{p};
  CHECK_THROWS_AS(
      spd::frechet_mean_weighted(pts, std::vector<double>{0.9}),
      rcg::ValidationError);
  CHECK_THROWS_AS(
      spd::frechet_mean_weighted(std::vector<SpdPoint>{}, std::vector<double>{}),
      rcg::ValidationError);
}
