#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "persym/autsearch.hpp"
#include "persym/graph.hpp"
#include "persym/group.hpp"

namespace persym {

// A simple cycle held in canonical form: rotated so the smallest vertex
// leads, reflected so the second vertex is the smaller of the anchor's two
// cycle neighbors. Two vertex sequences describe the same geometric cycle
// iff their canonical forms are equal.
class CyclePath {
 public:
  explicit CyclePath(std::vector<int> vertices);

  const std::vector<int>& vertices() const { return verts_; }
  int length() const { return static_cast<int>(verts_.size()); }

  bool operator==(const CyclePath&) const = default;
  bool operator<(const CyclePath& o) const { return verts_ < o.verts_; }

  std::string to_string() const;  // "(0 1 2 3)"

 private:
  std::vector<int> verts_;
};

// Canonical image of c under p.
CyclePath apply(const Permutation& p, const CyclePath& c);

bool is_cycle_of(const Graph& g, const CyclePath& c);

// Every simple cycle of g exactly once, sorted. DFS from each anchor vertex;
// a cycle is emitted only from its canonical traversal, so no dedup pass is
// needed. Throws resource_error("cycle-cap") past cap.
std::vector<CyclePath> enumerate_cycles(const Graph& g, std::uint64_t cap = 1'000'000);

// True iff every element of grp maps c to itself as a set. The stabilizer
// of c is a subgroup, so checking the generators suffices; no enumeration.
bool automorphism_invariant(const CyclePath& c, const PermutationGroup& grp);

// Every cycle of g is invariant under Aut(g).
bool is_cycle_stable(const Graph& g, std::uint64_t cycle_cap = 1'000'000,
                     const AutSearchOptions& opts = {});

enum class CycleSign { plus, minus, incompatible };

// How eta acts on the cycle c: +1 if it maps c to itself preserving the
// cyclic order, -1 if reversing it, incompatible if eta(c) is a different
// cycle altogether.
CycleSign cycle_restriction_sign(const Permutation& eta, const CyclePath& c);

}  // namespace persym
