#include "persym/graph.hpp"

#include <algorithm>

#include "persym/errors.hpp"

namespace persym {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw input_error("negative vertex count");
  for (auto& [u, v] : edges_) {
    if (u == v) throw input_error("loop edge " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw input_error("edge endpoint out of range: " + std::to_string(u) + " " +
                        std::to_string(v));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw input_error("duplicate edge");
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_));
  for (auto [u, v] : edges_) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  return adj;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(n_), 0);
  for (auto [u, v] : edges_) {
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  return deg;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.vertex_count()) return false;
  for (auto [u, v] : g.edges())
    if (!g.has_edge(p(u), p(v))) return false;
  return true;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  auto adj = g.adjacency();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> out;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[static_cast<std::size_t>(s)] = id;
    stack.assign(1, s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[static_cast<std::size_t>(id)].push_back(v);
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;  // ordered by smallest vertex because seeds increase
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
  std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t k = 0; k < verts.size(); ++k)
    index[static_cast<std::size_t>(verts[k])] = static_cast<int>(k);
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) {
    int a = index[static_cast<std::size_t>(u)], b = index[static_cast<std::size_t>(v)];
    if (a >= 0 && b >= 0) edges.emplace_back(a, b);
  }
  return Graph(static_cast<int>(verts.size()), std::move(edges));
}

namespace {

void extend_clique(const Graph& g, const std::vector<std::vector<int>>& adj,
                   std::vector<int>& cur, int max_verts, std::size_t out_cap,
                   std::vector<std::vector<int>>& out) {
  if (out.size() >= out_cap)
    throw resource_error("clique-cap", "clique enumeration exceeded " + std::to_string(out_cap));
  out.push_back(cur);
  if (static_cast<int>(cur.size()) == max_verts) return;
  // Candidates: neighbors of the last vertex above it, adjacent to the rest.
  for (int w : adj[static_cast<std::size_t>(cur.back())]) {
    if (w <= cur.back()) continue;
    bool ok = true;
    for (std::size_t k = 0; k + 1 < cur.size() && ok; ++k) ok = g.has_edge(cur[k], w);
    if (!ok) continue;
    cur.push_back(w);
    extend_clique(g, adj, cur, max_verts, out_cap, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> cliques(const Graph& g, int max_dim, std::size_t out_cap) {
  if (max_dim < 0) throw input_error("negative clique dimension");
  std::vector<std::vector<int>> out;
  auto adj = g.adjacency();
  std::vector<int> cur;
  for (int v = 0; v < g.vertex_count(); ++v) {
    cur.assign(1, v);
    extend_clique(g, adj, cur, max_dim + 1, out_cap, out);
  }
  return out;  // lexicographic by construction
}

Graph threshold_subgraph(const WeightedGraph& wg, double a) {
  std::vector<std::pair<int, int>> edges;
  for (std::size_t k = 0; k < wg.edges.size(); ++k)
    if (wg.weights[k] <= a) edges.push_back(wg.edges[k]);
  return Graph(wg.n, std::move(edges));
}

Graph empty_graph(int n) { return Graph(n, {}); }

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  if (n >= 3) edges.emplace_back(0, n - 1);
  return Graph(n, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph(a + b, std::move(edges));
}

Graph petersen_graph() {
  // Outer 5-cycle 0..4, inner pentagram 5..9, spokes v -- v+5.
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < 5; ++v) {
    edges.emplace_back(v, (v + 1) % 5);
    edges.emplace_back(5 + v, 5 + (v + 2) % 5);
    edges.emplace_back(v, 5 + v);
  }
  return Graph(10, std::move(edges));
}

}  // namespace persym
