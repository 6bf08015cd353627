#include "persym/filtration.hpp"

#include <algorithm>
#include <cmath>

#include "persym/errors.hpp"

namespace persym {

std::vector<std::pair<int, int>> Filtration::added_edges(int i, int j) const {
  const auto& ei = graphs[static_cast<std::size_t>(i)].edges();
  const auto& ej = graphs[static_cast<std::size_t>(j)].edges();
  std::vector<std::pair<int, int>> out;
  std::set_difference(ej.begin(), ej.end(), ei.begin(), ei.end(), std::back_inserter(out));
  return out;
}

Filtration make_filtration(std::vector<double> thresholds, std::vector<Graph> graphs) {
  if (graphs.empty()) throw input_error("filtration needs at least one step");
  if (thresholds.size() != graphs.size())
    throw input_error("filtration threshold/graph count mismatch");
  for (std::size_t k = 0; k + 1 < thresholds.size(); ++k)
    if (!(thresholds[k] < thresholds[k + 1]))
      throw input_error("filtration thresholds not strictly increasing");
  for (double t : thresholds)
    if (!std::isfinite(t)) throw input_error("non-finite filtration threshold");
  const int n = graphs.front().vertex_count();
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    if (graphs[k].vertex_count() != n)
      throw input_error("filtration graphs disagree on vertex count");
    if (k == 0) continue;
    const auto& prev = graphs[k - 1].edges();
    const auto& cur = graphs[k].edges();
    if (!std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()))
      throw input_error("filtration step " + std::to_string(k) + " drops an edge");
  }
  // Drop steps that add nothing; their thresholds are not events.
  Filtration f;
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    if (k > 0 && graphs[k].edge_count() == f.graphs.back().edge_count()) continue;
    f.thresholds.push_back(thresholds[k]);
    f.graphs.push_back(std::move(graphs[k]));
  }
  return f;
}

Filtration build_filtration(const PointCloud& cloud, double eps_max, double tol) {
  if (!(eps_max > 0)) throw input_error("eps_max must be positive");
  const DistanceMatrix d = pairwise_distances(cloud);
  std::vector<double> thresholds{0.0};
  std::vector<Graph> graphs{proximity_graph(d, 0.0)};
  for (double c : critical_distances(d, tol)) {
    if (c > eps_max) break;
    thresholds.push_back(c);
    graphs.push_back(proximity_graph(d, c));
  }
  return make_filtration(std::move(thresholds), std::move(graphs));
}

Filtration build_filtration(const WeightedGraph& wg, double eps_max, double tol) {
  if (!(eps_max > 0)) throw input_error("eps_max must be positive");
  std::vector<double> events = wg.weights;
  std::sort(events.begin(), events.end());
  // Same chained merge as for distances: events within tol collapse onto the
  // largest member of the cluster.
  std::vector<double> merged;
  std::size_t k = 0;
  while (k < events.size()) {
    std::size_t e = k;
    while (e + 1 < events.size() && events[e + 1] - events[e] <= tol) ++e;
    merged.push_back(events[e]);
    k = e + 1;
  }
  const double start = merged.empty() || merged.front() > 0 ? 0.0 : merged.front() - 1.0;
  std::vector<double> thresholds{start};
  std::vector<Graph> graphs{threshold_subgraph(wg, start)};
  for (double c : merged) {
    if (c > eps_max) break;
    thresholds.push_back(c);
    graphs.push_back(threshold_subgraph(wg, c));
  }
  return make_filtration(std::move(thresholds), std::move(graphs));
}

}  // namespace persym
