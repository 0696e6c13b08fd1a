// Copyright 2026 The tomoent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <limits>
#include <vector>

namespace tomoent::tseries {

using PointMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Exact Euclidean nearest-neighbor search over the rows of a point matrix.
/// Indices in [exclude_lo, exclude_hi] are skipped, which implements both
/// self-exclusion and a temporal (Theiler) window.
class KdTree {
 public:
  struct Hit {
    int index = -1;
    double distance = std::numeric_limits<double>::infinity();
  };

  /// Keeps a reference to `points`; the matrix must outlive the tree.
  explicit KdTree(const PointMatrix& points, int leaf_size = 8);

  /// Nearest row to `query` outside the excluded index range whose distance
  /// is strictly greater than `min_distance`. index == -1 when none exists.
  Hit nearest(const double* query, int exclude_lo, int exclude_hi,
              double min_distance = -1.0) const;

  /// All rows within `radius` (inclusive) outside the excluded range, in
  /// ascending index order.
  std::vector<int> within(const double* query, double radius, int exclude_lo,
                          int exclude_hi) const;

 private:
  struct Node {
    int lo = 0;  // range into order_
    int hi = 0;
    int split_dim = -1;  // -1 for a leaf
    double split = 0.0;
    int left = -1;
    int right = -1;
  };

  int build(int lo, int hi);
  void nearest_rec(int node, const double* q, int ex_lo, int ex_hi, double min_d2,
                   Hit& best, double& best_d2) const;
  void within_rec(int node, const double* q, double r2, int ex_lo, int ex_hi,
                  std::vector<int>& out) const;
  double dist2(int row, const double* q) const;

  const PointMatrix& points_;
  int dim_;
  int leaf_size_;
  std::vector<int> order_;
  std::vector<Node> nodes_;
};

}  // namespace tomoent::tseries
