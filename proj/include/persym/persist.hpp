#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "persym/autsearch.hpp"
#include "persym/filtration.hpp"
#include "persym/group.hpp"

namespace persym {

// Decides whether an automorphism of graphs[j] restricts to an automorphism
// of every graph between graphs[i] and graphs[j].
//
// Criterion used: eta is an automorphism of graphs[j] and maps each edge of
// E(G_j) \ E(G_i) to itself as an unordered pair. Equivalence with the
// for-all-intermediates condition: among the intermediate graphs are
// (V, E_i), which forces eta(E_i) = E_i, and (V, E_i + e) for each added
// edge e, which then forces eta(e) = e because eta already maps E_i onto
// E_i and must map the one extra edge somewhere inside E_i + e. Conversely,
// an eta fixing every added edge setwise preserves each intermediate edge
// set E_i <= E <= E_j edge by edge. The exponential definition survives in
// survives_bruteforce as a test oracle.
bool survives(const Permutation& eta, int i, int j, const Filtration& filt);

// Literal form of the condition: checks eta against all 2^k intermediate
// edge sets. k <= 12 enforced; oracle use only.
bool survives_bruteforce(const Permutation& eta, const Graph& g_i, const Graph& g_j);

// The subgroup of Aut(G_i) hit by survivors from index j.
struct SurvivorGroup {
  int target = 0;  // i
  int source = 0;  // j
  mpz_class order;
  // Present when order <= the requested cap. Sorted, deterministic.
  std::optional<std::vector<Permutation>> elements;
};

// Survivors from j to i, computed as one colored automorphism search on
// graphs[j]: the added edges force a vertex coloring (vertices covered by
// two or more added edges are pinned, pinned endpoints propagate along
// added edges, each remaining untouched added edge becomes its own
// two-vertex class), and the colored group is exactly the survivor set.
// Enumeration happens only when the order fits under enum_cap.
SurvivorGroup persistent_image(const Filtration& filt, int i, int j,
                               std::uint64_t enum_cap = 1'000'000,
                               const AutSearchOptions& opts = {});

// Upper-triangular table of survivor-group orders r(i,j).
class RankTable {
 public:
  explicit RankTable(int steps);
  int steps() const { return steps_; }
  const mpz_class& r(int i, int j) const;
  void set(int i, int j, mpz_class value);

 private:
  std::size_t slot(int i, int j) const;
  int steps_ = 0;
  std::vector<mpz_class> entries_;
};

// All r(i,j). Rows are filled left to right so the run of trailing ones
// (only the identity survives, and it always does) is computed once per row.
RankTable rank_table(const Filtration& filt, const AutSearchOptions& opts = {});

struct PInterval {
  int birth = 0;
  std::optional<int> death;  // nullopt = never dies
  mpz_class multiplicity;

  bool operator==(const PInterval&) const = default;
};

struct Barcode {
  std::vector<PInterval> intervals;  // sorted by birth, finite deaths first

  // Sum of multiplicities of bars alive at index k.
  mpz_class bars_containing(int k) const;
};

// Interval decomposition by inclusion-exclusion on the rank table:
//   m(i,j) = r(i,j-1) - r(i,j) - r(i-1,j-1) + r(i-1,j),   r(-1,.) = 0,
// and m(i,inf) = r(i,T) - r(i-1,T). A negative multiplicity means the
// table is not a valid rank invariant and raises internal_error.
Barcode barcode(const RankTable& rt);

// Direct-sum notation, one summand per bar copy:
// finite [i,j) prints as S^i(F[x]/(x^{j-i})), infinite as S^i F[x], with
// unicode superscripts. Output truncated past max_summands.
std::string qmodule_description(const Barcode& bc, std::size_t max_summands = 4096);

}  // namespace persym
