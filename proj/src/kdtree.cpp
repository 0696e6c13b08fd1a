// Copyright 2026 The tomoent Authors
// SPDX-License-Identifier: Apache-2.0

#include "tomoent/kdtree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tomoent/errors.hpp"

namespace tomoent::tseries {

KdTree::KdTree(const PointMatrix& points, int leaf_size)
    : points_(points), dim_(static_cast<int>(points.cols())), leaf_size_(std::max(1, leaf_size)) {
  if (points.rows() == 0 || points.cols() == 0) throw InvalidArgument("KdTree: no points");
  order_.resize(static_cast<std::size_t>(points.rows()));
  std::iota(order_.begin(), order_.end(), 0);
  nodes_.reserve(2 * order_.size() / leaf_size_ + 1);
  build(0, static_cast<int>(order_.size()));
}

int KdTree::build(int lo, int hi) {
  const int id = static_cast<int>(nodes_.size());
  nodes_.push_back(Node{lo, hi});
  if (hi - lo <= leaf_size_) return id;

  int best_dim = 0;
  double best_spread = -1.0;
  for (int d = 0; d < dim_; ++d) {
    double mn = std::numeric_limits<double>::infinity();
    double mx = -mn;
    for (int i = lo; i < hi; ++i) {
      const double v = points_(order_[i], d);
      mn = std::min(mn, v);
      mx = std::max(mx, v);
    }
    if (mx - mn > best_spread) {
      best_spread = mx - mn;
      best_dim = d;
    }
  }
  if (best_spread <= 0.0) return id;  // all points identical: keep as leaf

  const int mid = lo + (hi - lo) / 2;
  std::nth_element(order_.begin() + lo, order_.begin() + mid, order_.begin() + hi,
                   [&](int a, int b) { return points_(a, best_dim) < points_(b, best_dim); });
  const double split = points_(order_[mid], best_dim);
  const int left = build(lo, mid);
  const int right = build(mid, hi);
  Node& n = nodes_[id];
  n.split_dim = best_dim;
  n.split = split;
  n.left = left;
  n.right = right;
  return id;
}

double KdTree::dist2(int row, const double* q) const {
  double s = 0.0;
  for (int d = 0; d < dim_; ++d) {
    const double diff = points_(row, d) - q[d];
    s += diff * diff;
  }
  return s;
}

KdTree::Hit KdTree::nearest(const double* query, int exclude_lo, int exclude_hi,
                            double min_distance) const {
  Hit best;
  double best_d2 = std::numeric_limits<double>::infinity();
  const double min_d2 = min_distance < 0.0 ? -1.0 : min_distance * min_distance;
  nearest_rec(0, query, exclude_lo, exclude_hi, min_d2, best, best_d2);
  if (best.index >= 0) best.distance = std::sqrt(best_d2);
  return best;
}

void KdTree::nearest_rec(int id, const double* q, int ex_lo, int ex_hi, double min_d2,
                         Hit& best, double& best_d2) const {
  const Node& n = nodes_[id];
  if (n.split_dim < 0) {
    for (int i = n.lo; i < n.hi; ++i) {
      const int row = order_[i];
      if (row >= ex_lo && row <= ex_hi) continue;
      const double d2 = dist2(row, q);
      if (d2 > min_d2 && (d2 < best_d2 || (d2 == best_d2 && row < best.index))) {
        best_d2 = d2;
        best.index = row;
      }
    }
    return;
  }
  const double diff = q[n.split_dim] - n.split;
  const int first = diff < 0.0 ? n.left : n.right;
  const int second = diff < 0.0 ? n.right : n.left;
  nearest_rec(first, q, ex_lo, ex_hi, min_d2, best, best_d2);
  if (diff * diff <= best_d2) nearest_rec(second, q, ex_lo, ex_hi, min_d2, best, best_d2);
}

std::vector<int> KdTree::within(const double* query, double radius, int exclude_lo,
                                int exclude_hi) const {
  std::vector<int> out;
  within_rec(0, query, radius * radius, exclude_lo, exclude_hi, out);
  std::sort(out.begin(), out.end());
  return out;
}

void KdTree::within_rec(int id, const double* q, double r2, int ex_lo, int ex_hi,
                        std::vector<int>& out) const {
  const Node& n = nodes_[id];
  if (n.split_dim < 0) {
    for (int i = n.lo; i < n.hi; ++i) {
      const int row = order_[i];
      if (row >= ex_lo && row <= ex_hi) continue;
      if (dist2(row, q) <= r2) out.push_back(row);
    }
    return;
  }
  const double diff = q[n.split_dim] - n.split;
  const int first = diff < 0.0 ? n.left : n.right;
  const int second = diff < 0.0 ? n.right : n.left;
  within_rec(first, q, r2, ex_lo, ex_hi, out);
  if (diff * diff <= r2) within_rec(second, q, r2, ex_lo, ex_hi, out);
}

}  // namespace tomoent::tseries
