#pragma once

#include <span>
#include <vector>

#include "linalg.hpp"

namespace rcg {

// Static 3-D kd-tree for exact k-nearest-neighbor queries. Ties in distance
// are broken by ascending point index, so neighbor sets are deterministic
// even with duplicated sample locations. Built once, then shared read-only
// across threads.
class NeighborIndex {
 public:
  explicit NeighborIndex(std::span<const Point3> points);

  // Indices of the k nearest points to q, ordered by (distance, index).
  std::vector<int> nearest(const Point3& q, int k) const;

  int nearest_one(const Point3& q) const;
  int size() const { return static_cast<int>(points_.size()); }
  const Point3& point(int i) const { return points_[static_cast<size_t>(i)]; }

 private:
  struct Node {
    int begin = 0, end = 0;           // range into order_
    int axis = -1;                    // -1 marks a leaf
    double split = 0.0;
    int left = -1, right = -1;
  };

  struct Candidate {
    double dist2;
    int index;
    bool operator<(const Candidate& o) const {  // "better": used inverted in heap
      return dist2 < o.dist2 || (dist2 == o.dist2 && index < o.index);
    }
  };

  int build(int begin, int end);
  void search(int node, const Point3& q, int k,
              std::vector<Candidate>& heap) const;

  std::vector<Point3> points_;
  std::vector<int> order_;
  std::vector<Node> nodes_;
  int root_ = -1;
};

}  // namespace rcg
