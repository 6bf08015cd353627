#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "persym/perm.hpp"

namespace persym {

// Finite simple graph in canonical form: vertex count plus a lexicographically
// sorted list of edges {u, v} with u < v, no loops, no duplicates. Equality of
// graphs is equality of these fields.
class Graph {
 public:
  Graph() = default;
  // Normalizes edge endpoint order and sorts. Loops, duplicates and endpoints
  // out of range are rejected with input_error.
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool has_edge(int u, int v) const;  // binary search on the sorted edge list

  // Sorted neighbor lists.
  std::vector<std::vector<int>> adjacency() const;
  std::vector<int> degrees() const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

// True iff p maps the edge set of g onto itself (adjacency and non-adjacency
// preserved; for a bijection on a finite edge set the two are equivalent).
bool is_automorphism(const Graph& g, const Permutation& p);

// Vertex lists of the path components, each sorted, ordered by smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Subgraph induced on verts (which must be sorted); vertices are relabeled to
// 0..k-1 following the order of verts.
Graph induced_subgraph(const Graph& g, const std::vector<int>& verts);

// All cliques with at most max_dim + 1 vertices (so up to simplex dimension
// max_dim), each reported once as a sorted vertex list, in lexicographic
// order. Vertices count as 0-dimensional cliques. Exponential in the worst
// case; intended for validation-scale graphs. Throws resource_error if the
// output would exceed out_cap entries.
std::vector<std::vector<int>> cliques(const Graph& g, int max_dim,
                                      std::size_t out_cap = 1000000);

// Edge-weighted graph used to drive threshold filtrations.
struct WeightedGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<double> weights;  // parallel to edges
};

// Subgraph with exactly the edges of weight <= a, on the same vertex set.
Graph threshold_subgraph(const WeightedGraph& wg, double a);

// Small standard graphs (used by tests and the documentation examples).
Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_bipartite(int a, int b);
Graph petersen_graph();

}  // namespace persym
