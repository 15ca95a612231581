#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "manifold_points.hpp"
#include "neighbors.hpp"
#include "sample_table.hpp"

// Univariate normal-score (Gaussian anamorphosis) transforms and their
// local, moving-neighborhood application; plus compositional log-ratio
// transforms. A variable z~ is scored as z = G^{-1}(F(z~)) with F the
// plotting-position empirical CDF (r - 0.5)/n; ties receive average ranks
// split by a deterministic 1e-9 * index offset.
namespace rcg::anam {

// Quantile-matching table for one variable. `raw` ascends (flat across tie
// groups), `score` ascends strictly.
struct Anamorphosis {
  std::string variable;
  std::vector<double> raw;
  std::vector<double> score;
  std::optional<Point3> center;  // set for neighborhood-local transforms
};

struct ScoreResult {
  std::vector<double> scores;  // in input order
  Anamorphosis transform;
};

ScoreResult normal_score(std::span<const double> values,
                         std::string variable = {});

// Piecewise-linear interpolation of the quantile table; beyond the table the
// tails extend linearly with the adjacent interior slope, frozen past |z| = 8.
// Exact on the table's nodes, monotone non-decreasing everywhere.
double back_transform(const Anamorphosis& transform, double z);

struct NeighborhoodSpec {
  int l = 800;  // nearest samples per neighborhood; hard floor l >= p + 2
};

struct LocalScores {
  std::vector<int> neighbors;           // sample indices, (distance, index) order
  Matrix scores;                        // l x p, rows follow `neighbors`
  std::vector<Anamorphosis> transforms; // one per variable
};

// Scores each variable over exactly the l nearest samples to `center`
// (Euclidean distance, ties by ascending sample index).
LocalScores local_gaussianize(const SampleTable& table, const Point3& center,
                              const NeighborhoodSpec& spec,
                              const NeighborIndex& index);

// Pearson correlation of score columns, repaired to PD by eigenvalue
// flooring at 1e-6 + reprojection when the empirical matrix is
// semidefinite. Diagonal is exactly 1.
CorrPoint local_correlation(const Matrix& scores);

// Additive log-ratio transform of compositional data in percent. With
// rest_base the denominator is the synthesized Rest = 100 - sum(parts);
// otherwise the last part is the base and rows must close to 100. Zeros are
// replaced by half the smallest positive observed value of their part.
SampleTable alr_transform(const SampleTable& table, bool rest_base = true);
SampleTable alr_inverse(const SampleTable& table, bool rest_base = true);

// Row-level kernels shared with the grid back-transform.
Vector alr_inverse_row(const Vector& coords, bool rest_base);

}  // namespace rcg::anam
