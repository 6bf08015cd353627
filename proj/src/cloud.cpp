#include "persym/cloud.hpp"

#include <algorithm>
#include <cmath>

#include "persym/errors.hpp"

namespace persym {

void validate(const PointCloud& cloud) {
  if (cloud.points.empty()) throw input_error("point cloud has no points");
  if (!cloud.labels.empty() && cloud.labels.size() != cloud.points.size())
    throw input_error("label count does not match point count");
  for (const auto& p : cloud.points)
    for (double c : p)
      if (!std::isfinite(c)) throw input_error("non-finite coordinate in point cloud");
}

DistanceMatrix::DistanceMatrix(int n, std::vector<double> data) : n_(n), data_(std::move(data)) {
  if (data_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw input_error("distance matrix size mismatch");
}

DistanceMatrix pairwise_distances(const PointCloud& cloud) {
  validate(cloud);
  const int n = cloud.size();
  std::vector<double> data(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double s = 0.0;
      for (int c = 0; c < 3; ++c) {
        double d = cloud.points[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] -
                   cloud.points[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
        s += d * d;
      }
      double dist = std::sqrt(s);
      data[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] = dist;
      data[static_cast<std::size_t>(j) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] = dist;
    }
  }
  return DistanceMatrix(n, std::move(data));
}

bool has_duplicate_points(const DistanceMatrix& d) {
  for (int i = 0; i < d.size(); ++i)
    for (int j = i + 1; j < d.size(); ++j)
      if (d(i, j) == 0.0) return true;
  return false;
}

std::vector<double> critical_distances(const DistanceMatrix& d, double tol) {
  std::vector<double> all;
  for (int i = 0; i < d.size(); ++i)
    for (int j = i + 1; j < d.size(); ++j)
      if (d(i, j) > 0.0) all.push_back(d(i, j));
  std::sort(all.begin(), all.end());
  // Chain-merge values closer than tol; keep the cluster maximum so the
  // proximity graph at the kept value contains the whole cluster's edges.
  std::vector<double> out;
  std::size_t k = 0;
  while (k < all.size()) {
    std::size_t e = k;
    while (e + 1 < all.size() && all[e + 1] - all[e] <= tol) ++e;
    out.push_back(all[e]);
    k = e + 1;
  }
  return out;
}

Graph proximity_graph(const DistanceMatrix& d, double eps) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < d.size(); ++i)
    for (int j = i + 1; j < d.size(); ++j)
      if (d(i, j) <= eps) edges.emplace_back(i, j);
  return Graph(d.size(), std::move(edges));
}

}  // namespace persym
