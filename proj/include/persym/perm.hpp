#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace persym {

// A permutation of {0, ..., n-1} stored as its image table.
// Composition convention: (a.compose(b))(v) = a(b(v)), i.e. b acts first.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);  // validates bijection

  static Permutation identity(int n);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int v) const { return images_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;
  bool is_identity() const;

  bool operator==(const Permutation&) const = default;
  // Lexicographic order on image tables; used for deterministic sorting.
  bool operator<(const Permutation& other) const { return images_ < other.images_; }

  // Disjoint cycle decomposition. Fixed points are omitted unless requested;
  // each cycle starts at its smallest element and cycles are sorted by that
  // element, so the decomposition is a canonical form.
  std::vector<std::vector<int>> cycles(bool include_fixed = false) const;

  // Cycle notation, e.g. "(0 2)(1 3)". The identity prints as "()".
  std::string cycle_string() const;

 private:
  std::vector<int> images_;
};

// Least k >= 1 with p^k = identity; the lcm of the cycle lengths.
std::uint64_t element_order(const Permutation& p);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

}  // namespace persym
