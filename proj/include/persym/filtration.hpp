#pragma once

#include <vector>

#include "persym/cloud.hpp"
#include "persym/graph.hpp"

namespace persym {

// A nested tower of graphs on a fixed vertex set, one per threshold.
// thresholds are strictly increasing; graphs[k] is the graph active on
// [thresholds[k], thresholds[k+1]). Consecutive graphs always differ.
struct Filtration {
  std::vector<double> thresholds;
  std::vector<Graph> graphs;

  int steps() const { return static_cast<int>(graphs.size()); }
  int vertex_count() const { return graphs.empty() ? 0 : graphs.front().vertex_count(); }

  // Edges of graphs[j] absent from graphs[i], i <= j.
  std::vector<std::pair<int, int>> added_edges(int i, int j) const;
};

// Validates and assembles a filtration from explicit data: equal lengths,
// strictly increasing thresholds, shared vertex count, nested edge sets.
// Steps adding no edges are dropped (their thresholds vanish; the first
// step is always kept so the tower starts somewhere).
Filtration make_filtration(std::vector<double> thresholds, std::vector<Graph> graphs);

// Proximity-graph tower of a point cloud: threshold 0 carries the empty
// graph, then one step per critical distance <= eps_max, each adding the
// edges attaining it. Distances closer than tol are treated as one event.
Filtration build_filtration(const PointCloud& cloud, double eps_max, double tol = 1e-9);

// Same construction driven by explicit edge weights instead of distances.
// The starting step sits just below the smallest weight (at 0 when all
// weights are positive).
Filtration build_filtration(const WeightedGraph& wg, double eps_max, double tol = 1e-9);

}  // namespace persym
