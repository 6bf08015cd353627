#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "persym/graph.hpp"
#include "persym/group.hpp"

namespace persym {

struct AutSearchOptions {
  // Upper bound on search-tree nodes before the search gives up with
  // resource_error("node-cap"). Generous: refinement plus orbit pruning
  // keeps realistic inputs far below it.
  std::uint64_t node_cap = 50'000'000;
};

// Automorphism group of g, as a generator set with stabilizer chain.
// Backtracking over an equitable-partition refinement tree; every reported
// generator is validated against the edge relation before being accepted.
PermutationGroup automorphism_group(const Graph& g, const AutSearchOptions& opts = {});

// Same, but only permutations preserving the coloring (colors[v] is an
// arbitrary small integer class label; p is admissible iff
// colors[p(v)] == colors[v] for all v).
PermutationGroup automorphism_group_colored(const Graph& g,
                                            const std::vector<int>& colors,
                                            const AutSearchOptions& opts = {});

// log2 |Aut(g)| computed componentwise: isolated vertices and repeated
// component shapes contribute factorials of their counts, each component
// shape contributes its own group once. Avoids building a stabilizer chain
// for the huge groups that arise when many vertices are still unconnected,
// which is the common state halfway through a filtration. Agrees with
// automorphism_group(g).log2_order() always, only cheaper.
double log2_automorphism_order(const Graph& g, const AutSearchOptions& opts = {});

// Sum over path components with >= 2 vertices of the element-order totals of
// the component automorphism groups. Zero iff the graph has no edges.
// Components are handled independently so a product group is never
// enumerated as a whole; if any single component group exceeds enum_cap the
// result is CapExceeded with that component's order.
std::variant<mpz_class, CapExceeded> symmetry_degree(const Graph& g,
                                                     std::uint64_t enum_cap,
                                                     const AutSearchOptions& opts = {});

}  // namespace persym
