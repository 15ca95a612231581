#include "manifold_points.hpp"

#include <cmath>
#include <string>

#include "matfun.hpp"

namespace rcg {

SpdPoint::SpdPoint(Matrix m) : m_(matfun::symmetrize_checked(m)) {
  matfun::require_pd(matfun::sym_eig(m_), "SpdPoint");
}

SpdPoint SpdPoint::trusted(Matrix m) {
  Matrix sym = 0.5 * (m + m.transpose());
  return SpdPoint(std::move(sym), TrustedTag{});
}

CorrPoint::CorrPoint(Matrix m) : m_(SpdPoint(std::move(m)).matrix()) {
  for (Eigen::Index i = 0; i < m_.rows(); ++i) {
    if (std::abs(m_(i, i) - 1.0) > 1e-10)
      throw ValidationError("CorrPoint: diagonal entry " + std::to_string(i) +
                            " is " + std::to_string(m_(i, i)) + ", not 1");
    m_(i, i) = 1.0;
    for (Eigen::Index j = 0; j < m_.cols(); ++j) {
      if (j != i && !(std::abs(m_(i, j)) < 1.0))
        throw ValidationError("CorrPoint: off-diagonal (" + std::to_string(i) +
                              "," + std::to_string(j) + ") = " +
                              std::to_string(m_(i, j)) +
                              " outside (-1, 1)");
    }
  }
}

CorrPoint CorrPoint::trusted(Matrix m) {
  Matrix sym = 0.5 * (m + m.transpose());
  for (Eigen::Index i = 0; i < sym.rows(); ++i) sym(i, i) = 1.0;
  return CorrPoint(std::move(sym), TrustedTag{});
}

}  // namespace rcg
