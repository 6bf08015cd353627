#include "persym/cycles.hpp"

#include <algorithm>
#include <sstream>

#include "persym/errors.hpp"

namespace persym {

CyclePath::CyclePath(std::vector<int> vertices) : verts_(std::move(vertices)) {
  const std::size_t m = verts_.size();
  if (m < 3) throw input_error("cycle needs at least three vertices");
  for (int v : verts_)
    if (v < 0) throw input_error("negative vertex in cycle");
  std::vector<int> sorted = verts_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw input_error("repeated vertex in cycle");
  // Rotate the smallest vertex to the front, then pick the direction whose
  // second vertex is smaller.
  const std::size_t r = static_cast<std::size_t>(
      std::min_element(verts_.begin(), verts_.end()) - verts_.begin());
  std::vector<int> canon(m);
  const int fwd = verts_[(r + 1) % m];
  const int bwd = verts_[(r + m - 1) % m];
  if (fwd < bwd) {
    for (std::size_t k = 0; k < m; ++k) canon[k] = verts_[(r + k) % m];
  } else {
    for (std::size_t k = 0; k < m; ++k) canon[k] = verts_[(r + m - k) % m];
  }
  verts_ = std::move(canon);
}

std::string CyclePath::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < verts_.size(); ++k) {
    if (k) os << ' ';
    os << verts_[k];
  }
  os << ')';
  return os.str();
}

CyclePath apply(const Permutation& p, const CyclePath& c) {
  std::vector<int> image;
  image.reserve(c.vertices().size());
  for (int v : c.vertices()) image.push_back(p(v));
  return CyclePath(std::move(image));
}

bool is_cycle_of(const Graph& g, const CyclePath& c) {
  const auto& vs = c.vertices();
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (vs[k] >= g.vertex_count()) return false;
    if (!g.has_edge(vs[k], vs[(k + 1) % vs.size()])) return false;
  }
  return true;
}

namespace {

// Grows simple paths anchored at their smallest vertex; a closing edge is
// reported only when path[1] < path.back(), which selects exactly the
// canonical traversal of each cycle, so every cycle appears once.
void cycle_dfs(const std::vector<std::vector<int>>& adj, std::vector<int>& path,
               std::vector<char>& on_path, std::uint64_t cap, std::vector<CyclePath>& out) {
  const int anchor = path.front();
  const int tip = path.back();
  for (int w : adj[static_cast<std::size_t>(tip)]) {
    if (w == anchor && path.size() >= 3 && path[1] < tip) {
      if (out.size() >= cap)
        throw resource_error("cycle-cap",
                             "cycle enumeration exceeded " + std::to_string(cap) + " cycles");
      out.push_back(CyclePath(path));
    }
    if (w <= anchor || on_path[static_cast<std::size_t>(w)]) continue;
    on_path[static_cast<std::size_t>(w)] = 1;
    path.push_back(w);
    cycle_dfs(adj, path, on_path, cap, out);
    path.pop_back();
    on_path[static_cast<std::size_t>(w)] = 0;
  }
}

}  // namespace

std::vector<CyclePath> enumerate_cycles(const Graph& g, std::uint64_t cap) {
  std::vector<CyclePath> out;
  const auto adj = g.adjacency();
  std::vector<int> path;
  std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int s = 0; s < g.vertex_count(); ++s) {
    path.assign(1, s);
    on_path[static_cast<std::size_t>(s)] = 1;
    cycle_dfs(adj, path, on_path, cap, out);
    on_path[static_cast<std::size_t>(s)] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool automorphism_invariant(const CyclePath& c, const PermutationGroup& grp) {
  // The elements mapping c to itself form a subgroup, so the whole group
  // preserves c exactly when its generators do.
  for (const auto& g : grp.generators())
    if (!(apply(g, c) == c)) return false;
  return true;
}

bool is_cycle_stable(const Graph& g, std::uint64_t cycle_cap, const AutSearchOptions& opts) {
  const PermutationGroup grp = automorphism_group(g, opts);
  for (const auto& c : enumerate_cycles(g, cycle_cap))
    if (!automorphism_invariant(c, grp)) return false;
  return true;
}

CycleSign cycle_restriction_sign(const Permutation& eta, const CyclePath& c) {
  const auto& vs = c.vertices();
  const std::size_t m = vs.size();
  std::vector<int> img(m);
  for (std::size_t k = 0; k < m; ++k) img[k] = eta(vs[k]);
  const auto at = std::find(vs.begin(), vs.end(), img[0]);
  if (at == vs.end()) return CycleSign::incompatible;
  const std::size_t j = static_cast<std::size_t>(at - vs.begin());
  bool forward = true, backward = true;
  for (std::size_t k = 0; k < m && (forward || backward); ++k) {
    if (img[k] != vs[(j + k) % m]) forward = false;
    if (img[k] != vs[(j + m - k) % m]) backward = false;
  }
  if (forward) return CycleSign::plus;
  if (backward) return CycleSign::minus;
  return CycleSign::incompatible;
}

}  // namespace persym
