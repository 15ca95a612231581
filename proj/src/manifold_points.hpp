#pragma once

#include <utility>

#include "errors.hpp"
#include "linalg.hpp"

namespace rcg {

// A point on Sym+(p): symmetric positive definite with min eigenvalue above
// the relative PD threshold. Construction validates; `trusted` skips the
// eigenvalue check for matrices whose SPD-ness is guaranteed by construction
// (e.g. outputs of exp_map), but still symmetrizes.
class SpdPoint {
 public:
  explicit SpdPoint(Matrix m);
  static SpdPoint trusted(Matrix m);

  const Matrix& matrix() const noexcept { return m_; }
  int dim() const noexcept { return static_cast<int>(m_.rows()); }

  friend bool operator==(const SpdPoint& a, const SpdPoint& b) {
    return a.m_ == b.m_;
  }

 private:
  struct TrustedTag {};
  SpdPoint(Matrix m, TrustedTag) : m_(std::move(m)) {}
  Matrix m_;
};

// A point on Corr(p): SPD with unit diagonal and off-diagonals in (-1, 1).
// Representative of its Diag+(p) fiber.
class CorrPoint {
 public:
  explicit CorrPoint(Matrix m);
  static CorrPoint trusted(Matrix m);

  const Matrix& matrix() const noexcept { return m_; }
  int dim() const noexcept { return static_cast<int>(m_.rows()); }
  SpdPoint as_spd() const { return SpdPoint::trusted(m_); }

  friend bool operator==(const CorrPoint& a, const CorrPoint& b) {
    return a.m_ == b.m_;
  }

 private:
  struct TrustedTag {};
  CorrPoint(Matrix m, TrustedTag) : m_(std::move(m)) {}
  Matrix m_;
};

// Tangent vector anchored at `base`; `direction` lives in the ambient space
// of symmetric matrices.
struct TangentVector {
  SpdPoint base;
  Matrix direction;
};

}  // namespace rcg
