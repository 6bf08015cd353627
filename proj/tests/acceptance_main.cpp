// Acceptance gate. Exercises the seven shipping criteria end to end and
// prints exactly one PASS/FAIL line per criterion. Exit status is the number
// of failed criteria, so CTest treats any failure as a test failure.
//
// Usage: acceptance_gate <data-dir>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "persym/autsearch.hpp"
#include "persym/cloud.hpp"
#include "persym/curves.hpp"
#include "persym/cycles.hpp"
#include "persym/errors.hpp"
#include "persym/filtration.hpp"
#include "persym/graph.hpp"
#include "persym/group.hpp"
#include "persym/io.hpp"
#include "persym/persist.hpp"
#include "persym/stability.hpp"

#include "oracles.hpp"

using namespace persym;
using Clock = std::chrono::steady_clock;

namespace {

double elapsed_s(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---- criterion 1: automorphism orders of the reference graphs ------------

bool reference_graph_orders(std::ostringstream& detail) {
  struct Case {
    const char* name;
    Graph g;
    long want;
  };
  const std::vector<Case> cases = {
      {"K5", complete_graph(5), 120},       {"empty5", empty_graph(5), 120},
      {"P4", path_graph(4), 2},             {"C6", cycle_graph(6), 12},
      {"Petersen", petersen_graph(), 120},  {"K23", complete_bipartite(2, 3), 12},
  };
  const auto t0 = Clock::now();
  bool ok = true;
  for (const auto& c : cases) {
    const mpz_class got = automorphism_group(c.g).order();
    if (got != c.want) {
      detail << " [" << c.name << " order " << got.get_str() << ", want " << c.want << "]";
      ok = false;
    }
  }
  const double dt = elapsed_s(t0);
  detail << " 6 graphs in " << dt << "s";
  if (dt >= 1.0) {
    detail << " [over the 1s budget]";
    ok = false;
  }
  return ok;
}

// ---- criterion 2: the four-cycle tower, ranks, barcode, identity ---------

bool four_cycle_tower(std::ostringstream& detail) {
  WeightedGraph wg;
  wg.n = 4;
  wg.edges = {{1, 2}, {0, 3}, {0, 1}, {2, 3}};
  wg.weights = {1.0, 2.0, 3.0, 3.0};
  const Filtration filt = build_filtration(wg, 3.0);
  if (filt.steps() != 4) {
    detail << " [expected 4 steps, got " << filt.steps() << "]";
    return false;
  }

  const RankTable rt = rank_table(filt);
  const long want[4][4] = {{24, 4, 4, 1}, {0, 4, 4, 1}, {0, 0, 8, 2}, {0, 0, 0, 8}};
  bool ok = true;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j)
      if (rt.r(i, j) != want[i][j]) {
        detail << " [r(" << i << "," << j << ")=" << rt.r(i, j).get_str() << ", want "
               << want[i][j] << "]";
        ok = false;
      }

  const Barcode bc = barcode(rt);
  const std::vector<PInterval> expect = {
      {0, 1, 20}, {0, 3, 3}, {0, std::nullopt, 1},
      {2, 3, 3},  {2, std::nullopt, 1}, {3, std::nullopt, 6}};
  if (bc.intervals != expect) {
    detail << " [barcode has " << bc.intervals.size() << " interval kinds, want "
           << expect.size() << " with the pinned births and multiplicities]";
    ok = false;
  }
  for (int k = 0; k < 4; ++k)
    if (bc.bars_containing(k) != rt.r(k, k)) {
      detail << " [bars through " << k << " = " << bc.bars_containing(k).get_str()
             << " != r(k,k) = " << rt.r(k, k).get_str() << "]";
      ok = false;
    }
  detail << " ranks, barcode and the diagonal identity all match";
  return ok;
}

// ---- criterion 3: randomized cross-checks against naive oracles ----------

int aut_vs_bruteforce(std::mt19937& rng, int instances) {
  std::uniform_int_distribution<int> size(2, 7);
  std::uniform_real_distribution<double> dens(0.1, 0.9);
  int mismatches = 0;
  for (int t = 0; t < instances; ++t) {
    const Graph g = oracle::random_graph(rng, size(rng), dens(rng));
    const PermutationGroup grp = automorphism_group(g);
    const auto elems = oracle::brute_force_aut(g);
    if (grp.order() != static_cast<long>(elems.size())) ++mismatches;
    for (const auto& p : elems)
      if (!grp.contains(p)) ++mismatches;
  }
  return mismatches;
}

int survives_vs_bruteforce(std::mt19937& rng, int instances) {
  std::uniform_int_distribution<int> size(4, 6);
  std::uniform_real_distribution<double> dens(0.2, 0.8);
  std::uniform_int_distribution<int> extra(0, 10);
  int mismatches = 0;
  int done = 0;
  while (done < instances) {
    const int n = size(rng);
    const Graph gi = oracle::random_graph(rng, n, dens(rng));
    std::vector<std::pair<int, int>> missing;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!gi.has_edge(u, v)) missing.emplace_back(u, v);
    std::shuffle(missing.begin(), missing.end(), rng);
    missing.resize(std::min<std::size_t>(missing.size(), extra(rng)));
    auto edges = gi.edges();
    edges.insert(edges.end(), missing.begin(), missing.end());
    const Graph gj(n, edges);

    auto etas = oracle::brute_force_aut(gj);
    if (etas.size() > 120) continue;  // keep the exponential oracle cheap
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    for (int k = 0; k < 8; ++k) {
      std::shuffle(img.begin(), img.end(), rng);
      etas.emplace_back(img);
    }

    // A pair adding nothing collapses to a single step; index 0 then checks
    // the degenerate window.
    const Filtration filt = make_filtration({0.0, 1.0}, {gi, gj});
    const int j = filt.steps() - 1;
    for (const auto& eta : etas)
      if (survives(eta, 0, j, filt) != survives_bruteforce(eta, gi, gj)) ++mismatches;
    ++done;
  }
  return mismatches;
}

// Aut of the clique complex equals Aut of the graph: a permutation preserves
// the full clique list iff it preserves the edge list. Checked against every
// permutation, and tied back to the search-based group order.
int clique_complex_vs_graph(std::mt19937& rng, int instances) {
  std::uniform_int_distribution<int> size(3, 6);
  int mismatches = 0;
  for (int t = 0; t < instances; ++t) {
    const int n = size(rng);
    const PointCloud cloud = oracle::random_cloud(rng, n);
    const DistanceMatrix d = pairwise_distances(cloud);
    const auto crit = critical_distances(d);
    std::uniform_int_distribution<std::size_t> pick(0, crit.size() - 1);
    const Graph g = proximity_graph(d, crit[pick(rng)]);

    const auto simplex_list = cliques(g, n);
    const std::set<std::vector<int>> simplices(simplex_list.begin(), simplex_list.end());
    long edge_preserving = 0;
    for (const auto& p : oracle::all_permutations(n)) {
      bool keeps_simplices = true;
      for (const auto& s : simplex_list) {
        std::vector<int> image;
        image.reserve(s.size());
        for (int v : s) image.push_back(p(v));
        std::sort(image.begin(), image.end());
        if (!simplices.count(image)) {
          keeps_simplices = false;
          break;
        }
      }
      const bool keeps_edges = is_automorphism(g, p);
      if (keeps_edges != keeps_simplices) ++mismatches;
      if (keeps_edges) ++edge_preserving;
    }
    if (automorphism_group(g).order() != edge_preserving) ++mismatches;
  }
  return mismatches;
}

int ranks_vs_rational(std::mt19937& rng, int instances) {
  int mismatches = 0;
  for (int t = 0; t < instances; ++t) {
    const int n = 4 + t % 3;
    const Filtration filt = oracle::random_small_aut_filtration(rng, n, 24);
    const RankTable rt = rank_table(filt);
    for (int i = 0; i < filt.steps(); ++i)
      for (int j = i; j < filt.steps(); ++j)
        if (rt.r(i, j) != oracle::rational_rank(filt, i, j)) ++mismatches;
  }
  return mismatches;
}

bool oracle_cross_checks(std::ostringstream& detail) {
  const auto t0 = Clock::now();
  std::mt19937 rng(2026);
  const int a = aut_vs_bruteforce(rng, 220);
  const int b = survives_vs_bruteforce(rng, 210);
  const int c = clique_complex_vs_graph(rng, 210);
  const int d = ranks_vs_rational(rng, 200);
  const double dt = elapsed_s(t0);
  detail << " 220+210+210+200 instances, mismatches " << a << "/" << b << "/" << c << "/"
         << d << ", " << dt << "s";
  bool ok = (a + b + c + d) == 0;
  if (dt >= 60.0) {
    detail << " [over the 60s budget]";
    ok = false;
  }
  return ok;
}

// ---- criterion 4: structural properties on random inputs -----------------

// Nested tower over a random edge order, arbitrary automorphism sizes.
Filtration random_tower(std::mt19937& rng, int n) {
  std::vector<std::pair<int, int>> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
  std::shuffle(all.begin(), all.end(), rng);
  std::uniform_int_distribution<int> grow(1, 4);
  std::vector<Graph> graphs;
  std::vector<double> thresholds;
  std::size_t have = std::uniform_int_distribution<std::size_t>(0, all.size() / 2)(rng);
  double t = 0.0;
  while (true) {
    graphs.emplace_back(n, std::vector<std::pair<int, int>>(all.begin(), all.begin() + have));
    thresholds.push_back(t);
    t += 1.0;
    if (have == all.size() || graphs.size() >= 5) break;
    have = std::min(all.size(), have + grow(rng));
  }
  return make_filtration(std::move(thresholds), std::move(graphs));
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return false;
  const auto adj = g.adjacency();
  std::vector<int> stack = {0}, seen(n, 0);
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
  }
  return reached == n;
}

bool structural_properties(std::ostringstream& detail) {
  std::mt19937 rng(4096);
  int violations = 0;

  // Rank tables shrink when the window widens, bar multiplicities are
  // non-negative, and bars through k sum to r(k,k).
  for (int t = 0; t < 60; ++t) {
    Filtration filt;
    if (t % 2) {
      filt = random_tower(rng, 4 + t % 3);
    } else {
      const PointCloud cloud = oracle::random_cloud(rng, 4 + t % 3);
      filt = build_filtration(cloud, 10.0);
    }
    const RankTable rt = rank_table(filt);
    const int s = filt.steps();
    for (int i = 0; i < s; ++i)
      for (int j = i; j < s; ++j)
        for (int ii = i; ii <= j; ++ii)
          for (int jj = ii; jj <= j; ++jj)
            if (rt.r(i, j) > rt.r(ii, jj)) ++violations;
    try {
      const Barcode bc = barcode(rt);
      for (const auto& bar : bc.intervals)
        if (bar.multiplicity < 0) ++violations;
      for (int k = 0; k < s; ++k)
        if (bc.bars_containing(k) != rt.r(k, k)) ++violations;
    } catch (const internal_error&) {
      ++violations;
    }
  }

  // Surviving through a window implies surviving through every sub-window.
  for (int t = 0; t < 60; ++t) {
    const Filtration filt = random_tower(rng, 4 + t % 3);
    const int last = filt.steps() - 1;
    const auto etas = oracle::brute_force_aut(filt.graphs[last]);
    if (etas.size() > 48) continue;
    for (const auto& eta : etas)
      for (int i = 0; i <= last; ++i) {
        if (!survives(eta, i, last, filt)) continue;
        for (int ii = i; ii <= last; ++ii)
          for (int jj = ii; jj <= last; ++jj)
            if (is_automorphism(filt.graphs[jj], eta) && !survives(eta, ii, jj, filt))
              ++violations;
      }
  }

  // On a connected graph every element order counts at least once, so the
  // degree total dominates the group order.
  int connected_seen = 0;
  std::uniform_int_distribution<int> size(2, 7);
  std::uniform_real_distribution<double> dens(0.3, 0.9);
  while (connected_seen < 120) {
    const Graph g = oracle::random_graph(rng, size(rng), dens(rng));
    if (!is_connected(g)) continue;
    ++connected_seen;
    const auto grp = automorphism_group(g);
    const auto gamma = symmetry_degree(g, 1'000'000);
    if (const auto* total = std::get_if<mpz_class>(&gamma)) {
      if (*total < grp.order()) ++violations;
    } else {
      ++violations;  // |Aut| <= 7! always fits the cap here
    }
  }

  // Pearson correlation is invariant under positive affine maps and flips
  // sign under negative ones.
  std::uniform_real_distribution<double> coeff(0.1, 4.0), shift(-10.0, 10.0),
      val(-5.0, 5.0);
  for (int t = 0; t < 200; ++t) {
    const int len = 3 + t % 10;
    std::vector<double> xs(len), ys(len);
    for (int k = 0; k < len; ++k) {
      xs[k] = val(rng) + k * 1e-3;  // the drift rules out zero variance
      ys[k] = val(rng) + k * 1e-3;
    }
    const double base = pearson(xs, ys);
    const double a = coeff(rng) * (t % 2 ? 1.0 : -1.0), b = shift(rng);
    std::vector<double> txs(len);
    for (int k = 0; k < len; ++k) txs[k] = a * xs[k] + b;
    const double got = pearson(txs, ys);
    if (std::abs(got - (a > 0 ? base : -base)) > 1e-12) ++violations;
  }

  // Scaling the cloud by a power of two scales every breakpoint exactly and
  // leaves the values alone.
  for (int t = 0; t < 40; ++t) {
    const PointCloud cloud = oracle::random_cloud(rng, 4 + t % 3);
    const double s = (t % 2) ? 2.0 : 0.25;
    PointCloud scaled = cloud;
    for (auto& p : scaled.points)
      for (double& x : p) x *= s;
    const StepCurve base = symmetry_order_curve(cloud, 8.0);
    const StepCurve big = symmetry_order_curve(scaled, s * 8.0);
    if (base.pieces() != big.pieces() || big.domain_end != s * 8.0) {
      ++violations;
      continue;
    }
    for (std::size_t k = 0; k < base.pieces(); ++k) {
      if (big.breakpoints[k] != s * base.breakpoints[k]) ++violations;
      const auto &u = base.values[k], &v = big.values[k];
      if (u.has_value() != v.has_value()) ++violations;
      else if (u && std::abs(*u - *v) > 1e-9) ++violations;
    }
  }

  detail << " rank monotonicity, barcode positivity and identity, survivor"
         << " functoriality, degree vs order, affine invariance, dyadic scaling:"
         << " violations " << violations;
  return violations == 0;
}

// ---- criterion 5: the c60 symmetry-order windows --------------------------

// True iff the step values overlapping (lo, hi) show a strict decrease and,
// later, a strict increase.
bool drop_then_rise(const StepCurve& c, double lo, double hi) {
  std::vector<double> vals;
  for (std::size_t k = 0; k < c.pieces(); ++k) {
    if (c.piece_end(k) <= lo || c.piece_start(k) >= hi) continue;
    if (!c.values[k]) return false;
    vals.push_back(*c.values[k]);
  }
  bool dropped = false;
  for (std::size_t k = 0; k + 1 < vals.size(); ++k) {
    if (vals[k + 1] < vals[k] - 1e-9) dropped = true;
    if (dropped && vals[k + 1] > vals[k] + 1e-9) return true;
  }
  return false;
}

bool c60_symmetry_windows(const std::string& data_dir, std::ostringstream& detail) {
  const PointCloud cloud = io::load_xyz(data_dir + "/fullerenes/c60.xyz");
  CurveOptions opts;
  opts.annotate_errors = true;
  const auto t0 = Clock::now();
  const StepCurve delta = symmetry_order_curve(cloud, 3.0, opts);
  const double dt = elapsed_s(t0);

  bool ok = true;
  const double windows[3][2] = {{1.40, 1.45}, {2.20, 2.45}, {2.70, 2.75}};
  for (const auto& w : windows) {
    const bool hit = drop_then_rise(delta, w[0], w[1]);
    detail << " (" << w[0] << "," << w[1] << ") " << (hit ? "drop+rise" : "MISSING");
    ok = ok && hit;
  }
  detail << ", " << delta.pieces() << " pieces in " << dt << "s";
  if (dt >= 60.0) {
    detail << " [over the 60s budget]";
    ok = false;
  }
  return ok;
}

// ---- criterion 6: the stability study -------------------------------------

bool stability_study(const std::string& data_dir, std::ostringstream& detail) {
  const auto molecules = io::load_manifest(data_dir + "/study.manifest");
  StudyOptions opts;
  opts.curve.annotate_errors = true;
  const auto t0 = Clock::now();
  const StabilityReport rep = run_study(molecules, opts);
  const double dt = elapsed_s(t0);

  bool ok = true;
  if (rep.results.size() != 12) {
    detail << " [" << rep.results.size() << " of 12 molecules succeeded]";
    ok = false;
  }
  for (const auto& f : rep.failures) {
    detail << " [failure: " << f << "]";
    ok = false;
  }
  for (const auto& r : rep.results)
    if (!(r.ell > 1.5 && r.ell < 3.0)) {
      detail << " [" << r.name << " ell " << r.ell << " outside (1.5,3)]";
      ok = false;
    }
  if (!rep.correlation) {
    detail << " [no correlation computed]";
    ok = false;
  } else {
    detail << " correlation " << *rep.correlation;
    if (std::abs(*rep.correlation) < 0.9) {
      detail << " [below 0.9 in magnitude]";
      ok = false;
    }
  }
  if (!rep.results.empty()) {
    const auto [lo, hi] = std::minmax_element(
        rep.results.begin(), rep.results.end(),
        [](const MoleculeResult& a, const MoleculeResult& b) { return a.ell < b.ell; });
    detail << ", ell in [" << lo->ell << ", " << hi->ell << "]";
  }
  detail << ", " << dt << "s";
  if (dt >= 300.0) {
    detail << " [over the 5min budget]";
    ok = false;
  }
  return ok;
}

// ---- criterion 7: the cycle-stability example graphs ----------------------

bool cycle_stability_examples(std::ostringstream& detail) {
  const Graph stable(8, {{0, 1}, {0, 3}, {0, 4}, {1, 2}, {1, 7}, {2, 3}, {2, 4},
                         {2, 5}, {3, 4}, {3, 6}, {4, 5}, {5, 6}, {5, 7}, {6, 7}});
  bool ok = true;
  if (!is_cycle_stable(stable)) {
    detail << " [the 14-edge example is not cycle-stable]";
    ok = false;
  }
  const auto grp = automorphism_group(stable);
  for (const auto& c :
       {CyclePath({2, 3, 4}), CyclePath({0, 1, 2, 3}), CyclePath({1, 2, 5, 6, 7})}) {
    if (!is_cycle_of(stable, c) || !automorphism_invariant(c, grp)) {
      detail << " [cycle " << c.to_string() << " not invariant]";
      ok = false;
    }
  }

  auto edges = stable.edges();
  std::erase(edges, std::pair<int, int>{2, 4});
  const Graph broken(8, edges);
  if (is_cycle_stable(broken)) {
    detail << " [the example minus one chord still reports cycle-stable]";
    ok = false;
  }

  const Graph hexagon(6, {{0, 1}, {1, 5}, {4, 5}, {2, 4}, {2, 3}, {0, 3}});
  const Permutation eta({5, 1, 2, 4, 3, 0});
  const CyclePath rim({0, 1, 5, 4, 2, 3});
  if (!is_automorphism(hexagon, eta) || !is_cycle_of(hexagon, rim) ||
      cycle_restriction_sign(eta, rim) != CycleSign::minus) {
    detail << " [the hexagon reflection does not restrict with sign -1]";
    ok = false;
  }
  detail << " stable example, broken subgraph, orientation reversal all as pinned";
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance_gate <data-dir>\n";
    return 64;
  }
  const std::string data_dir = argv[1];

  int failed = 0;
  const auto run = [&failed](int num, const char* name, auto&& fn) {
    std::ostringstream detail;
    bool ok = false;
    try {
      ok = fn(detail);
    } catch (const std::exception& e) {
      detail << " [exception: " << e.what() << "]";
    }
    std::cout << "criterion " << num << " (" << name << "): " << (ok ? "PASS" : "FAIL")
              << detail.str() << "\n"
              << std::flush;
    if (!ok) ++failed;
  };

  run(1, "reference graph orders", [](std::ostringstream& d) { return reference_graph_orders(d); });
  run(2, "four-cycle tower", [](std::ostringstream& d) { return four_cycle_tower(d); });
  run(3, "oracle cross-checks", [](std::ostringstream& d) { return oracle_cross_checks(d); });
  run(4, "structural properties", [](std::ostringstream& d) { return structural_properties(d); });
  run(5, "c60 symmetry windows",
      [&](std::ostringstream& d) { return c60_symmetry_windows(data_dir, d); });
  run(6, "stability study", [&](std::ostringstream& d) { return stability_study(data_dir, d); });
  run(7, "cycle stability examples",
      [](std::ostringstream& d) { return cycle_stability_examples(d); });

  return failed;
}
