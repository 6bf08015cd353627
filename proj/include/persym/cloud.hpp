#pragma once

#include <array>
#include <string>
#include <vector>

#include "persym/graph.hpp"

namespace persym {

// A finite point cloud in 3-space (coordinates in angstrom). Point index i is
// the graph vertex i throughout the pipeline. Labels are optional element
// symbols carried along from XYZ input.
struct PointCloud {
  std::vector<std::array<double, 3>> points;
  std::vector<std::string> labels;  // empty, or one per point

  int size() const { return static_cast<int>(points.size()); }
};

// Rejects empty clouds and non-finite coordinates with input_error.
void validate(const PointCloud& cloud);

// Symmetric matrix of pairwise Euclidean distances with zero diagonal.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(int n, std::vector<double> data);  // row-major n*n

  int size() const { return n_; }
  double operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                 static_cast<std::size_t>(j)];
  }

 private:
  int n_ = 0;
  std::vector<double> data_;
};

DistanceMatrix pairwise_distances(const PointCloud& cloud);

// True iff some off-diagonal distance is exactly zero. Duplicate points are
// legal (they are adjacent at every threshold) but callers may want to warn.
bool has_duplicate_points(const DistanceMatrix& d);

// Strictly increasing list of distinct positive pairwise distances. Values
// within tol of each other are merged (chained), and the merged critical
// value is the largest member of its cluster, so the proximity graph at a
// critical value already contains every edge of that cluster.
std::vector<double> critical_distances(const DistanceMatrix& d, double tol = 1e-9);

// Edge {x, y} present iff d(x, y) <= eps. Monotone in eps.
Graph proximity_graph(const DistanceMatrix& d, double eps);

}  // namespace persym
