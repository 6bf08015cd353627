#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "persym/perm.hpp"

namespace persym {

// Returned instead of an element list when a group is larger than the
// requested enumeration cap. Carries the exact order; it is a value, not a
// fault.
struct CapExceeded {
  mpz_class order;
};

// A permutation group given by generators, with a stabilizer chain
// (base points, fundamental orbits and transversals) built deterministically
// at construction. Immutable afterwards; safe for concurrent queries.
class PermutationGroup {
 public:
  // Builds the chain with a deterministic Schreier-Sims procedure. The chain,
  // and hence every derived quantity (order, enumeration order, ...), is a
  // fixed function of the generator list.
  PermutationGroup(int degree, std::vector<Permutation> generators);

  static PermutationGroup trivial(int degree);

  int degree() const { return degree_; }

  // The defining generators, deduplicated, in the order given.
  const std::vector<Permutation>& generators() const { return generators_; }

  const mpz_class& order() const { return order_; }

  // Sum of log2 of the fundamental orbit sizes. Avoids materializing the
  // order when only its logarithm is needed; exactly 0 iff the group is
  // trivial (an empty sum).
  double log2_order() const { return log2_order_; }

  const std::vector<int>& base() const { return base_; }
  std::vector<std::size_t> orbit_sizes() const;

  // Membership by sifting through the chain. Degree mismatch -> input_error.
  bool contains(const Permutation& p) const;

  // Every element exactly once, in a deterministic order (depth-first product
  // of transversal elements in orbit-discovery order), or CapExceeded with
  // the exact order if the group is larger than cap.
  std::variant<std::vector<Permutation>, CapExceeded> enumerate(std::uint64_t cap) const;

 private:
  struct Level {
    int base_point = -1;
    std::vector<Permutation> gens;        // strong generators fixing the base prefix
    std::vector<int> orbit;               // discovery order, orbit[0] == base_point
    std::vector<int> orbit_index;         // vertex -> position in orbit, or -1
    std::vector<Permutation> transversal; // transversal[k](base_point) == orbit[k]
    std::vector<std::vector<int>> tinv;   // inverse image tables of transversal
  };

  PermutationGroup() = default;

  // Generators of the stabilizer of base_[0..level-1]: all strong generators
  // assigned to levels >= level.
  void rebuild_orbit(std::size_t level);
  // Returns the permutation left over after dividing out transversals from
  // `level` downward, together with the level where sifting stopped.
  std::pair<Permutation, std::size_t> sift_from(Permutation p, std::size_t level) const;
  void add_strong_generator(Permutation g, std::size_t level);
  void close_chain();

  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<int> base_;
  std::vector<Level> levels_;
  mpz_class order_ = 1;
  double log2_order_ = 0.0;
};

}  // namespace persym
