#include "persym/persist.hpp"

#include <algorithm>
#include <climits>

#include "persym/errors.hpp"

namespace persym {

namespace {

void check_pair(const Filtration& filt, int i, int j) {
  if (i < 0 || j >= filt.steps() || i > j)
    throw input_error("filtration index pair out of range");
}

bool fixes_edge_setwise(const Permutation& eta, int u, int v) {
  return (eta(u) == u && eta(v) == v) || (eta(u) == v && eta(v) == u);
}

}  // namespace

bool survives(const Permutation& eta, int i, int j, const Filtration& filt) {
  check_pair(filt, i, j);
  if (eta.degree() != filt.vertex_count())
    throw input_error("permutation degree does not match filtration");
  if (!is_automorphism(filt.graphs[static_cast<std::size_t>(j)], eta)) return false;
  for (auto [u, v] : filt.added_edges(i, j))
    if (!fixes_edge_setwise(eta, u, v)) return false;
  return true;
}

bool survives_bruteforce(const Permutation& eta, const Graph& g_i, const Graph& g_j) {
  if (g_i.vertex_count() != g_j.vertex_count())
    throw input_error("nested pair must share the vertex set");
  if (eta.degree() != g_i.vertex_count())
    throw input_error("permutation degree does not match graphs");
  const auto& ei = g_i.edges();
  const auto& ej = g_j.edges();
  if (!std::includes(ej.begin(), ej.end(), ei.begin(), ei.end()))
    throw input_error("graphs are not nested");
  std::vector<std::pair<int, int>> added;
  std::set_difference(ej.begin(), ej.end(), ei.begin(), ei.end(), std::back_inserter(added));
  if (added.size() > 12)
    throw resource_error("intermediate-cap",
                         "brute-force survival check over " + std::to_string(added.size()) +
                             " added edges");
  for (std::uint32_t mask = 0; mask < (1u << added.size()); ++mask) {
    std::vector<std::pair<int, int>> edges = ei;
    for (std::size_t b = 0; b < added.size(); ++b)
      if (mask & (1u << b)) edges.push_back(added[b]);
    if (!is_automorphism(Graph(g_i.vertex_count(), std::move(edges)), eta)) return false;
  }
  return true;
}

SurvivorGroup persistent_image(const Filtration& filt, int i, int j, std::uint64_t enum_cap,
                               const AutSearchOptions& opts) {
  check_pair(filt, i, j);
  const Graph& gj = filt.graphs[static_cast<std::size_t>(j)];
  const int n = gj.vertex_count();
  const auto added = filt.added_edges(i, j);

  // Every survivor must fix each added edge setwise. That pins vertices met
  // by two added edges, pinned endpoints propagate across added edges, and
  // what remains is a set of vertex-disjoint added edges whose endpoints may
  // at most swap. All of it is expressible as a vertex coloring, so one
  // colored search delivers the survivor subgroup exactly.
  std::vector<int> cover(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : added) {
    ++cover[static_cast<std::size_t>(u)];
    ++cover[static_cast<std::size_t>(v)];
  }
  std::vector<char> pinned(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) pinned[static_cast<std::size_t>(v)] = cover[static_cast<std::size_t>(v)] >= 2;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [u, v] : added) {
      if (pinned[static_cast<std::size_t>(u)] != pinned[static_cast<std::size_t>(v)]) {
        pinned[static_cast<std::size_t>(u)] = pinned[static_cast<std::size_t>(v)] = 1;
        changed = true;
      }
    }
  }
  std::vector<int> colors(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    if (pinned[static_cast<std::size_t>(v)]) colors[static_cast<std::size_t>(v)] = 1 + v;
  int next_color = n + 1;
  for (auto [u, v] : added) {
    if (pinned[static_cast<std::size_t>(u)]) continue;  // then v is pinned too, or both free
    colors[static_cast<std::size_t>(u)] = next_color;
    colors[static_cast<std::size_t>(v)] = next_color;
    ++next_color;
  }

  SurvivorGroup out;
  out.target = i;
  out.source = j;
  const PermutationGroup grp = automorphism_group_colored(gj, colors, opts);
  out.order = grp.order();
  if (enum_cap > 0) {
    auto res = grp.enumerate(enum_cap);
    if (auto* elems = std::get_if<std::vector<Permutation>>(&res)) {
      std::sort(elems->begin(), elems->end());
      out.elements = std::move(*elems);
    }
  }
  return out;
}

RankTable::RankTable(int steps) : steps_(steps) {
  if (steps <= 0) throw input_error("rank table needs at least one step");
  entries_.assign(static_cast<std::size_t>(steps) * (static_cast<std::size_t>(steps) + 1) / 2, 0);
}

std::size_t RankTable::slot(int i, int j) const {
  if (i < 0 || j < i || j >= steps_) throw input_error("rank table index out of range");
  const std::size_t si = static_cast<std::size_t>(i);
  return si * (2 * static_cast<std::size_t>(steps_) - si + 1) / 2 +
         static_cast<std::size_t>(j - i);
}

const mpz_class& RankTable::r(int i, int j) const { return entries_[slot(i, j)]; }

void RankTable::set(int i, int j, mpz_class value) { entries_[slot(i, j)] = std::move(value); }

RankTable rank_table(const Filtration& filt, const AutSearchOptions& opts) {
  const int T = filt.steps() - 1;
  RankTable rt(filt.steps());
  for (int i = 0; i <= T; ++i) {
    bool tail_is_ones = false;
    for (int j = i; j <= T; ++j) {
      if (tail_is_ones) {
        rt.set(i, j, 1);
        continue;
      }
      mpz_class order = persistent_image(filt, i, j, 0, opts).order;
      // The identity always survives and r never grows along a row, so a
      // row that reaches 1 stays there.
      tail_is_ones = order == 1;
      rt.set(i, j, std::move(order));
    }
  }
  return rt;
}

mpz_class Barcode::bars_containing(int k) const {
  mpz_class total = 0;
  for (const auto& bar : intervals)
    if (bar.birth <= k && (!bar.death || *bar.death > k)) total += bar.multiplicity;
  return total;
}

Barcode barcode(const RankTable& rt) {
  const int T = rt.steps() - 1;
  auto r = [&rt](int i, int j) -> mpz_class {
    if (i < 0) return 0;
    return rt.r(i, j);
  };
  Barcode bc;
  for (int i = 0; i <= T; ++i) {
    for (int j = i + 1; j <= T; ++j) {
      mpz_class m = r(i, j - 1) - r(i, j) - r(i - 1, j - 1) + r(i - 1, j);
      if (m < 0)
        throw internal_error("negative bar multiplicity at (" + std::to_string(i) + "," +
                             std::to_string(j) + ")");
      if (m > 0) bc.intervals.push_back(PInterval{i, j, std::move(m)});
    }
    mpz_class m = r(i, T) - r(i - 1, T);
    if (m < 0) throw internal_error("negative infinite-bar multiplicity at " + std::to_string(i));
    if (m > 0) bc.intervals.push_back(PInterval{i, std::nullopt, std::move(m)});
  }
  std::sort(bc.intervals.begin(), bc.intervals.end(),
            [](const PInterval& a, const PInterval& b) {
              if (a.birth != b.birth) return a.birth < b.birth;
              const int da = a.death.value_or(INT_MAX);
              const int db = b.death.value_or(INT_MAX);
              return da < db;
            });
  return bc;
}

namespace {

std::string superscript(int value) {
  static const char* digits[10] = {"⁰", "¹", "²", "³", "⁴",
                                   "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string plain = std::to_string(value);
  std::string out;
  for (char c : plain) out += digits[c - '0'];
  return out;
}

}  // namespace

std::string qmodule_description(const Barcode& bc, std::size_t max_summands) {
  if (bc.intervals.empty()) return "0";
  std::string out;
  std::size_t emitted = 0;
  for (const auto& bar : bc.intervals) {
    std::string summand = "Σ" + superscript(bar.birth);
    if (bar.death)
      summand += "(\U0001d53d[x]/(x" + superscript(*bar.death - bar.birth) + "))";
    else
      summand += "\U0001d53d[x]";
    for (mpz_class copy = 0; copy < bar.multiplicity; ++copy) {
      if (emitted == max_summands) {
        out += " ⊕ …";
        return out;
      }
      if (emitted) out += " ⊕ ";
      out += summand;
      ++emitted;
    }
  }
  return out;
}

}  // namespace persym
