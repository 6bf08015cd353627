#include "persym/perm.hpp"

#include <numeric>
#include <sstream>

#include "persym/errors.hpp"

namespace persym {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : images_) {
    if (v < 0 || v >= n) throw input_error("permutation image out of range");
    if (seen[static_cast<std::size_t>(v)]) throw input_error("permutation image repeated");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::compose(const Permutation& other) const {
  if (degree() != other.degree()) throw input_error("composing permutations of different degrees");
  std::vector<int> im(images_.size());
  for (std::size_t v = 0; v < im.size(); ++v)
    im[v] = images_[static_cast<std::size_t>(other.images_[v])];
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (std::size_t v = 0; v < im.size(); ++v)
    im[static_cast<std::size_t>(images_[v])] = static_cast<int>(v);
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t v = 0; v < images_.size(); ++v)
    if (images_[v] != static_cast<int>(v)) return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles(bool include_fixed) const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (int start = 0; start < degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cyc;
    int v = start;
    do {
      seen[static_cast<std::size_t>(v)] = 1;
      cyc.push_back(v);
      v = images_[static_cast<std::size_t>(v)];
    } while (v != start);
    if (cyc.size() > 1 || include_fixed) out.push_back(std::move(cyc));
  }
  return out;  // already sorted: starts were visited in increasing order
}

std::string Permutation::cycle_string() const {
  auto cs = cycles(false);
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& cyc : cs) {
    os << '(';
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (k) os << ' ';
      os << cyc[k];
    }
    os << ')';
  }
  return os.str();
}

std::uint64_t element_order(const Permutation& p) {
  std::uint64_t ord = 1;
  for (const auto& cyc : p.cycles(false))
    ord = std::lcm(ord, static_cast<std::uint64_t>(cyc.size()));
  return ord;
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  // FNV-1a over the image table.
  std::uint64_t h = 14695981039346656037ULL;
  for (int v : p.images()) {
    h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace persym
