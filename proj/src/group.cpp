#include "persym/group.hpp"

#include <algorithm>
#include <cmath>

#include "persym/errors.hpp"

namespace persym {

namespace {

// out = a after b, on raw image tables. The hot loops below run on raw
// vectors to avoid one allocation per product.
void compose_vec(const std::vector<int>& a, const std::vector<int>& b, std::vector<int>& out) {
  out.resize(b.size());
  for (std::size_t v = 0; v < b.size(); ++v)
    out[v] = a[static_cast<std::size_t>(b[v])];
}

bool is_identity_vec(const std::vector<int>& a) {
  for (std::size_t v = 0; v < a.size(); ++v)
    if (a[v] != static_cast<int>(v)) return false;
  return true;
}

void invert_vec(const std::vector<int>& a, std::vector<int>& out) {
  out.resize(a.size());
  for (std::size_t v = 0; v < a.size(); ++v)
    out[static_cast<std::size_t>(a[v])] = static_cast<int>(v);
}

}  // namespace

PermutationGroup::PermutationGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree) {
  if (degree < 0) throw input_error("negative degree");
  for (const auto& g : generators) {
    if (g.degree() != degree) throw input_error("generator degree mismatch");
    if (g.is_identity()) continue;
    if (std::find(generators_.begin(), generators_.end(), g) != generators_.end()) continue;
    generators_.push_back(g);
  }
  for (const auto& g : generators_) {
    auto [residue, level] = sift_from(g, 0);
    if (!residue.is_identity()) add_strong_generator(std::move(residue), level);
  }
  close_chain();
  order_ = 1;
  log2_order_ = 0.0;
  for (const auto& lv : levels_) {
    order_ *= static_cast<unsigned long>(lv.orbit.size());
    log2_order_ += std::log2(static_cast<double>(lv.orbit.size()));
  }
}

PermutationGroup PermutationGroup::trivial(int degree) {
  return PermutationGroup(degree, {});
}

std::vector<std::size_t> PermutationGroup::orbit_sizes() const {
  std::vector<std::size_t> out;
  out.reserve(levels_.size());
  for (const auto& lv : levels_) out.push_back(lv.orbit.size());
  return out;
}

void PermutationGroup::rebuild_orbit(std::size_t level) {
  Level& lv = levels_[level];
  lv.orbit.assign(1, lv.base_point);
  lv.orbit_index.assign(static_cast<std::size_t>(degree_), -1);
  lv.orbit_index[static_cast<std::size_t>(lv.base_point)] = 0;
  lv.transversal.assign(1, Permutation::identity(degree_));
  for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
    const int beta = lv.orbit[head];
    for (const auto& s : lv.gens) {
      const int img = s(beta);
      if (lv.orbit_index[static_cast<std::size_t>(img)] >= 0) continue;
      lv.orbit_index[static_cast<std::size_t>(img)] = static_cast<int>(lv.orbit.size());
      lv.orbit.push_back(img);
      lv.transversal.push_back(s.compose(lv.transversal[head]));
    }
  }
  lv.tinv.resize(lv.transversal.size());
  for (std::size_t k = 0; k < lv.transversal.size(); ++k)
    invert_vec(lv.transversal[k].images(), lv.tinv[k]);
}

std::pair<Permutation, std::size_t> PermutationGroup::sift_from(Permutation p,
                                                                std::size_t level) const {
  std::vector<int> cur = p.images();
  std::vector<int> tmp;
  std::size_t l = level;
  for (; l < levels_.size(); ++l) {
    const Level& lv = levels_[l];
    const int x = cur[static_cast<std::size_t>(lv.base_point)];
    const int k = lv.orbit_index.empty() ? -1 : lv.orbit_index[static_cast<std::size_t>(x)];
    if (k < 0) break;
    compose_vec(lv.tinv[static_cast<std::size_t>(k)], cur, tmp);
    cur.swap(tmp);
  }
  return {Permutation(std::move(cur)), l};
}

void PermutationGroup::add_strong_generator(Permutation g, std::size_t level) {
  // g fixes base_[0..level-1]. If it also fixes the rest of the base, the
  // base gets a new point g moves; otherwise `level` already names the first
  // base point g moves (sifting stopped there).
  if (level == levels_.size()) {
    int moved = -1;
    for (int v = 0; v < degree_; ++v)
      if (g(v) != v) { moved = v; break; }
    levels_.push_back(Level{});
    levels_.back().base_point = moved;
    base_.push_back(moved);
  }
  // Strong generator sets are nested: g joins every level whose base prefix
  // it fixes, so deeper transversals always live in shallower groups.
  for (std::size_t l = 0; l <= level; ++l) levels_[l].gens.push_back(g);
}

void PermutationGroup::close_chain() {
  if (levels_.empty()) return;
  std::vector<int> schreier, tmp;
  std::size_t i = levels_.size() - 1;
  while (true) {
    rebuild_orbit(i);
    bool complete = true;
    Level& lv = levels_[i];
    for (std::size_t bk = 0; bk < lv.orbit.size() && complete; ++bk) {
      for (std::size_t sk = 0; sk < lv.gens.size() && complete; ++sk) {
        const auto& s = lv.gens[sk].images();
        const int img = s[static_cast<std::size_t>(lv.orbit[bk])];
        const int tk = lv.orbit_index[static_cast<std::size_t>(img)];
        // Schreier generator t_{s(beta)}^-1 * s * t_beta; fixes the base
        // prefix through this level by construction.
        compose_vec(s, lv.transversal[bk].images(), tmp);
        compose_vec(lv.tinv[static_cast<std::size_t>(tk)], tmp, schreier);
        if (is_identity_vec(schreier)) continue;
        auto [residue, stop] = sift_from(Permutation(schreier), i + 1);
        if (residue.is_identity()) continue;
        add_strong_generator(std::move(residue), stop);
        // Levels up to `stop` gained a generator; re-verify from there down.
        i = stop;
        complete = false;
      }
    }
    if (!complete) continue;
    if (i == 0) break;
    --i;
  }
}

bool PermutationGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) throw input_error("membership query degree mismatch");
  return sift_from(p, 0).first.is_identity();
}

namespace {

void enumerate_rec(const std::vector<std::vector<Permutation>>& transversals, std::size_t level,
                   const Permutation& prefix, std::vector<Permutation>& out) {
  if (level == transversals.size()) {
    out.push_back(prefix);
    return;
  }
  for (const auto& t : transversals[level])
    enumerate_rec(transversals, level + 1, prefix.compose(t), out);
}

}  // namespace

std::variant<std::vector<Permutation>, CapExceeded> PermutationGroup::enumerate(
    std::uint64_t cap) const {
  if (order_ > static_cast<unsigned long>(cap)) return CapExceeded{order_};
  std::vector<std::vector<Permutation>> transversals;
  transversals.reserve(levels_.size());
  for (const auto& lv : levels_) transversals.push_back(lv.transversal);
  std::vector<Permutation> out;
  out.reserve(order_.get_ui());
  enumerate_rec(transversals, 0, Permutation::identity(degree_), out);
  return out;
}

}  // namespace persym
