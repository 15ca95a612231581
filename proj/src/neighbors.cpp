#include "neighbors.hpp"

#include <algorithm>
#include <string>

#include "errors.hpp"

namespace rcg {
namespace {

constexpr int kLeafSize = 16;

double coord(const Point3& p, int axis) {
  return axis == 0 ? p.x : axis == 1 ? p.y : p.z;
}

}  // namespace

NeighborIndex::NeighborIndex(std::span<const Point3> points)
    : points_(points.begin(), points.end()) {
  order_.resize(points_.size());
  for (size_t i = 0; i < order_.size(); ++i) order_[i] = static_cast<int>(i);
  if (!points_.empty()) root_ = build(0, static_cast<int>(points_.size()));
}

int NeighborIndex::build(int begin, int end) {
  Node node;
  node.begin = begin;
  node.end = end;
  const int id = static_cast<int>(nodes_.size());
  nodes_.push_back(node);
  if (end - begin <= kLeafSize) return id;

  // split on the axis with the widest extent
  double lo[3], hi[3];
  for (int a = 0; a < 3; ++a) {
    lo[a] = hi[a] = coord(points_[order_[begin]], a);
  }
  for (int i = begin + 1; i < end; ++i)
    for (int a = 0; a < 3; ++a) {
      const double v = coord(points_[order_[i]], a);
      lo[a] = std::min(lo[a], v);
      hi[a] = std::max(hi[a], v);
    }
  int axis = 0;
  for (int a = 1; a < 3; ++a)
    if (hi[a] - lo[a] > hi[axis] - lo[axis]) axis = a;
  if (hi[axis] - lo[axis] == 0.0) return id;  // all points coincide: leaf

  const int mid = begin + (end - begin) / 2;
  std::nth_element(order_.begin() + begin, order_.begin() + mid,
                   order_.begin() + end, [&](int a, int b) {
                     const double ca = coord(points_[a], axis);
                     const double cb = coord(points_[b], axis);
                     return ca < cb || (ca == cb && a < b);
                   });
  nodes_[id].axis = axis;
  nodes_[id].split = coord(points_[order_[mid]], axis);
  const int left = build(begin, mid);
  const int right = build(mid, end);
  nodes_[id].left = left;
  nodes_[id].right = right;
  return id;
}

void NeighborIndex::search(int node_id, const Point3& q, int k,
                           std::vector<Candidate>& heap) const {
  const Node& node = nodes_[static_cast<size_t>(node_id)];
  const auto worse = [](const Candidate& a, const Candidate& b) {
    return a < b;  // max-heap on (dist2, index): top is the current worst
  };
  if (node.axis < 0) {
    for (int i = node.begin; i < node.end; ++i) {
      const int idx = order_[i];
      const Candidate c{distance2(q, points_[idx]), idx};
      if (static_cast<int>(heap.size()) < k) {
        heap.push_back(c);
        std::push_heap(heap.begin(), heap.end(), worse);
      } else if (c < heap.front()) {
        std::pop_heap(heap.begin(), heap.end(), worse);
        heap.back() = c;
        std::push_heap(heap.begin(), heap.end(), worse);
      }
    }
    return;
  }
  const double diff = coord(q, node.axis) - node.split;
  const int near = diff < 0.0 ? node.left : node.right;
  const int far = diff < 0.0 ? node.right : node.left;
  search(near, q, k, heap);
  // descend the far side whenever it could still hold an equal-or-better
  // candidate; <= keeps equal-distance, lower-index points reachable
  if (static_cast<int>(heap.size()) < k || diff * diff <= heap.front().dist2)
    search(far, q, k, heap);
}

std::vector<int> NeighborIndex::nearest(const Point3& q, int k) const {
  if (k < 1) throw ValidationError("NeighborIndex::nearest: k must be >= 1");
  if (k > size())
    throw ValidationError("NeighborIndex::nearest: k = " + std::to_string(k) +
                          " exceeds the " + std::to_string(size()) +
                          " indexed points");
  std::vector<Candidate> heap;
  heap.reserve(static_cast<size_t>(k));
  search(root_, q, k, heap);
  std::sort(heap.begin(), heap.end());
  std::vector<int> out(heap.size());
  for (size_t i = 0; i < heap.size(); ++i) out[i] = heap[i].index;
  return out;
}

int NeighborIndex::nearest_one(const Point3& q) const {
  return nearest(q, 1)[0];
}

}  // namespace rcg
