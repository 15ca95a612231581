#pragma once

#include <cmath>
#include <cstdint>

#include <Eigen/Dense>

namespace rcg {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Spatial coordinates in meters. 2-D data uses z = 0.
struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend bool operator==(const Point3& a, const Point3& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
};

inline double distance2(const Point3& a, const Point3& b) {
  const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
  return dx * dx + dy * dy + dz * dz;
}

inline double distance(const Point3& a, const Point3& b) {
  return std::sqrt(distance2(a, b));
}

inline double frobenius_norm(const Matrix& a) { return a.norm(); }

}  // namespace rcg
