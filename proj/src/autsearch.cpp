#include "persym/autsearch.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>

#include "persym/errors.hpp"

namespace persym {

namespace {

// Individualization-refinement search for the colored automorphism group.
// The first root-to-leaf path (always taking the smallest vertex of the
// target cell) fixes a reference leaf; every other accepted leaf yields the
// permutation mapping the reference vertex sequence onto it. Candidates are
// validated against the edge relation and coloring before they count, so
// pruning can only cost time, never correctness.
class AutSearch {
 public:
  AutSearch(const Graph& g, const std::vector<int>& colors, const AutSearchOptions& opts)
      : n_(g.vertex_count()), adj_(g.adjacency()), graph_(g), colors_(colors), opts_(opts) {}

  std::vector<Permutation> run() {
    if (n_ == 0) return {};
    // Root cells: color classes, ascending color value.
    std::map<int, std::vector<int>> classes;
    for (int v = 0; v < n_; ++v) classes[colors_[static_cast<std::size_t>(v)]].push_back(v);
    Partition root;
    for (auto& [c, verts] : classes) root.push_back(std::move(verts));
    explore(std::move(root), 0, true);
    return gens_;
  }

 private:
  using Partition = std::vector<std::vector<int>>;

  enum class Outcome { found, nothing };

  // Splits every cell by neighbor counts into every other cell until the
  // partition stops changing. Subcells are ordered by ascending count, so
  // refinement commutes with relabeling by any color/edge-preserving map.
  void refine(Partition& p) const {
    std::vector<int> cnt(static_cast<std::size_t>(n_), 0);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t splitter = 0; splitter < p.size(); ++splitter) {
        for (int v : p[splitter]) cnt[static_cast<std::size_t>(v)] = 1;
        for (std::size_t ci = 0; ci < p.size(); ++ci) {
          if (p[ci].size() < 2) continue;
          std::map<int, std::vector<int>> groups;
          for (int v : p[ci]) {
            int k = 0;
            for (int w : adj_[static_cast<std::size_t>(v)])
              k += cnt[static_cast<std::size_t>(w)];
            groups[k].push_back(v);
          }
          if (groups.size() < 2) continue;
          changed = true;
          auto it = groups.begin();
          p[ci] = std::move(it->second);
          std::size_t insert_at = ci + 1;
          for (++it; it != groups.end(); ++it, ++insert_at)
            p.insert(p.begin() + static_cast<std::ptrdiff_t>(insert_at), std::move(it->second));
        }
        for (int v : p[splitter]) cnt[static_cast<std::size_t>(v)] = 0;
      }
    }
  }

  std::uint64_t invariant(const Partition& p) const {
    std::uint64_t h = 14695981039346656037ULL;
    auto mix = [&h](std::uint64_t x) {
      h ^= x;
      h *= 1099511628211ULL;
    };
    std::vector<int> cell_of(static_cast<std::size_t>(n_));
    for (std::size_t ci = 0; ci < p.size(); ++ci)
      for (int v : p[ci]) cell_of[static_cast<std::size_t>(v)] = static_cast<int>(ci);
    std::vector<int> row(p.size());
    for (std::size_t ci = 0; ci < p.size(); ++ci) {
      mix(p[ci].size());
      // The partition is equitable here, so one representative's neighbor
      // distribution speaks for the whole cell.
      std::fill(row.begin(), row.end(), 0);
      for (int w : adj_[static_cast<std::size_t>(p[ci][0])])
        ++row[static_cast<std::size_t>(cell_of[static_cast<std::size_t>(w)])];
      for (int c : row) mix(static_cast<std::uint64_t>(static_cast<std::uint32_t>(c)));
    }
    return h;
  }

  static bool discrete(const Partition& p) {
    for (const auto& c : p)
      if (c.size() != 1) return false;
    return true;
  }

  // First smallest non-singleton cell.
  static std::size_t target_cell(const Partition& p) {
    std::size_t best = p.size();
    std::size_t best_size = SIZE_MAX;
    for (std::size_t ci = 0; ci < p.size(); ++ci)
      if (p[ci].size() > 1 && p[ci].size() < best_size) {
        best = ci;
        best_size = p[ci].size();
      }
    return best;
  }

  static Partition individualize(const Partition& p, std::size_t ci, int v) {
    Partition q;
    q.reserve(p.size() + 1);
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k != ci) {
        q.push_back(p[k]);
        continue;
      }
      q.push_back({v});
      std::vector<int> rest;
      rest.reserve(p[k].size() - 1);
      for (int w : p[k])
        if (w != v) rest.push_back(w);
      q.push_back(std::move(rest));
    }
    return q;
  }

  bool accept_candidate(const std::vector<int>& leaf) {
    std::vector<int> images(static_cast<std::size_t>(n_));
    for (int k = 0; k < n_; ++k)
      images[static_cast<std::size_t>(first_leaf_[static_cast<std::size_t>(k)])] =
          leaf[static_cast<std::size_t>(k)];
    Permutation p(std::move(images));
    for (int v = 0; v < n_; ++v)
      if (colors_[static_cast<std::size_t>(p(v))] != colors_[static_cast<std::size_t>(v)])
        return false;
    if (!is_automorphism(graph_, p)) return false;
    if (!p.is_identity()) {
      gens_.push_back(std::move(p));
      orbits_stale_ = true;
    }
    return true;
  }

  // Union-find over vertex orbits of the generators fixing base_[0..depth-1]
  // pointwise; rebuilt lazily when new generators arrive.
  void rebuild_orbits(std::size_t depth) {
    orbit_rep_.resize(static_cast<std::size_t>(n_));
    std::iota(orbit_rep_.begin(), orbit_rep_.end(), 0);
    for (const auto& g : gens_) {
      bool fixes = true;
      for (std::size_t l = 0; l < depth && fixes; ++l)
        fixes = g(base_[l]) == base_[l];
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) unite(v, g(v));
    }
    orbits_depth_ = depth;
    orbits_stale_ = false;
  }

  int find(int v) {
    while (orbit_rep_[static_cast<std::size_t>(v)] != v) {
      orbit_rep_[static_cast<std::size_t>(v)] =
          orbit_rep_[static_cast<std::size_t>(orbit_rep_[static_cast<std::size_t>(v)])];
      v = orbit_rep_[static_cast<std::size_t>(v)];
    }
    return v;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) orbit_rep_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }

  Outcome explore(Partition p, std::size_t depth, bool on_spine) {
    if (++nodes_ > opts_.node_cap)
      throw resource_error("node-cap", "automorphism search exceeded " +
                                           std::to_string(opts_.node_cap) + " nodes");
    refine(p);
    const std::uint64_t inv = invariant(p);
    if (on_spine) {
      spine_inv_.resize(depth + 1);
      spine_inv_[depth] = inv;
    } else if (inv != spine_inv_[depth]) {
      return Outcome::nothing;
    }
    if (discrete(p)) {
      std::vector<int> leaf(static_cast<std::size_t>(n_));
      for (std::size_t k = 0; k < p.size(); ++k) leaf[k] = p[k][0];
      if (on_spine) {
        first_leaf_ = std::move(leaf);
        return Outcome::nothing;
      }
      return accept_candidate(leaf) ? Outcome::found : Outcome::nothing;
    }
    const std::size_t ci = target_cell(p);
    const std::vector<int> cell = p[ci];
    if (on_spine) {
      base_.push_back(cell[0]);
      const std::size_t d = depth;           // base_[d] == cell[0]
      explore(individualize(p, ci, cell[0]), depth + 1, true);
      std::vector<int> explored(1, cell[0]);
      for (std::size_t k = 1; k < cell.size(); ++k) {
        const int v = cell[k];
        if (orbits_stale_ || orbits_depth_ != d) rebuild_orbits(d);
        bool covered = false;
        for (int u : explored)
          if (find(u) == find(v)) {
            covered = true;
            break;
          }
        if (covered) continue;
        explore(individualize(p, ci, v), depth + 1, false);
        explored.push_back(v);
      }
      return Outcome::nothing;
    }
    for (int v : cell) {
      if (explore(individualize(p, ci, v), depth + 1, false) == Outcome::found)
        return Outcome::found;  // one representative per coset is enough
    }
    return Outcome::nothing;
  }

  const int n_;
  const std::vector<std::vector<int>> adj_;
  const Graph& graph_;
  const std::vector<int>& colors_;
  const AutSearchOptions& opts_;

  std::vector<Permutation> gens_;
  std::vector<int> first_leaf_;
  std::vector<std::uint64_t> spine_inv_;
  std::vector<int> base_;
  std::vector<int> orbit_rep_;
  std::size_t orbits_depth_ = 0;
  bool orbits_stale_ = true;
  std::uint64_t nodes_ = 0;
};

}  // namespace

PermutationGroup automorphism_group(const Graph& g, const AutSearchOptions& opts) {
  std::vector<int> colors(static_cast<std::size_t>(g.vertex_count()), 0);
  return automorphism_group_colored(g, colors, opts);
}

PermutationGroup automorphism_group_colored(const Graph& g, const std::vector<int>& colors,
                                            const AutSearchOptions& opts) {
  if (static_cast<int>(colors.size()) != g.vertex_count())
    throw input_error("color count does not match vertex count");
  AutSearch search(g, colors, opts);
  return PermutationGroup(g.vertex_count(), search.run());
}

namespace {

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::pair<int, int>> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.vertex_count(), v + a.vertex_count());
  return Graph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

}  // namespace

double log2_automorphism_order(const Graph& g, const AutSearchOptions& opts) {
  struct ComponentClass {
    Graph rep;
    mpz_class order;       // |Aut(rep)|
    double log2_order;
    int count;
  };
  // Cheap certificate first; exact isomorphism decides within a bucket. Two
  // connected graphs are isomorphic iff their disjoint union has twice the
  // product of their group orders (the extra factor is the swap).
  std::map<std::pair<int, std::vector<int>>, std::vector<ComponentClass>> buckets;
  for (const auto& comp : connected_components(g)) {
    Graph sub = induced_subgraph(g, comp);
    std::vector<int> degs = sub.degrees();
    std::sort(degs.begin(), degs.end());
    auto& bucket = buckets[{sub.vertex_count(), std::move(degs)}];
    const PermutationGroup grp = automorphism_group(sub, opts);
    bool matched = false;
    for (auto& cls : bucket) {
      const PermutationGroup joint = automorphism_group(disjoint_union(cls.rep, sub), opts);
      if (joint.order() == 2 * cls.order * grp.order()) {
        ++cls.count;
        matched = true;
        break;
      }
    }
    if (!matched)
      bucket.push_back(ComponentClass{std::move(sub), grp.order(), grp.log2_order(), 1});
  }
  double total = 0.0;
  for (const auto& [cert, bucket] : buckets) {
    for (const auto& cls : bucket) {
      total += cls.count * cls.log2_order;
      for (int k = 2; k <= cls.count; ++k) total += std::log2(static_cast<double>(k));
    }
  }
  return total;
}

std::variant<mpz_class, CapExceeded> symmetry_degree(const Graph& g, std::uint64_t enum_cap,
                                                     const AutSearchOptions& opts) {
  mpz_class total = 0;
  for (const auto& comp : connected_components(g)) {
    if (comp.size() < 2) continue;  // isolated points carry no symmetry degree
    const Graph sub = induced_subgraph(g, comp);
    const PermutationGroup grp = automorphism_group(sub, opts);
    auto res = grp.enumerate(enum_cap);
    if (auto* cap = std::get_if<CapExceeded>(&res)) return *cap;
    for (const auto& p : std::get<std::vector<Permutation>>(res))
      total += static_cast<unsigned long>(element_order(p));
  }
  return total;
}

}  // namespace persym
