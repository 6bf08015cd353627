#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <sstream>

#include "persym/cloud.hpp"
#include "persym/curves.hpp"
#include "persym/errors.hpp"
#include "persym/io.hpp"

#include "oracles.hpp"

using namespace persym;

namespace {

PointCloud unit_square() {
  PointCloud c;
  c.points = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}};
  return c;
}

StepCurve flat(double value, double from, double to) {
  StepCurve c;
  c.breakpoints = {from};
  c.values = {value};
  c.domain_end = to;
  return c;
}

}  // namespace

TEST_CASE("symmetry order curve of the unit square") {
  StepCurve d = symmetry_order_curve(unit_square(), 3.0);
  REQUIRE(d.breakpoints.size() == 3);
  CHECK(d.breakpoints[0] == 0.0);
  CHECK(d.breakpoints[1] == 1.0);
  CHECK(d.breakpoints[2] == std::sqrt(2.0));
  CHECK(d.domain_end == 3.0);
  const double log24 = std::log2(24.0);
  CHECK(*d.values[0] == doctest::Approx(log24).epsilon(1e-12));  // empty graph, S4
  CHECK(*d.values[1] == doctest::Approx(3.0).epsilon(1e-12));    // C4, |D8| = 8
  CHECK(*d.values[2] == doctest::Approx(log24).epsilon(1e-12));  // K4 past the diagonal
  CHECK(d.warnings.empty());

  CHECK(*d.value_at(0.5) == doctest::Approx(log24));
  CHECK(*d.value_at(1.2) == doctest::Approx(3.0));
  CHECK(!d.value_at(3.5).has_value());  // outside the domain
}

TEST_CASE("symmetry degree curve of the unit square") {
  StepCurve g = symmetry_degree_curve(unit_square(), 3.0);
  REQUIRE(g.pieces() == 3);
  CHECK(!g.values[0].has_value());  // isolated points carry no degree
  CHECK(*g.values[1] == doctest::Approx(std::log2(19.0)).epsilon(1e-12));
  CHECK(*g.values[2] == doctest::Approx(std::log2(67.0)).epsilon(1e-12));
}

TEST_CASE("two-point cloud curves") {
  PointCloud two;
  two.points = {{0, 0, 0}, {1, 0, 0}};
  StepCurve d = symmetry_order_curve(two, 3.0);
  REQUIRE(d.pieces() == 2);
  CHECK(*d.values[0] == 1.0);
  CHECK(*d.values[1] == 1.0);
  StepCurve g = symmetry_degree_curve(two, 3.0);
  CHECK(!g.values[0].has_value());
  CHECK(*g.values[1] == doctest::Approx(std::log2(3.0)).epsilon(1e-12));
}

TEST_CASE("delta is nonnegative and moves only at critical distances") {
  std::mt19937 rng(61);
  for (int t = 0; t < 25; ++t) {
    PointCloud cloud = oracle::random_cloud(rng, 6);
    // Past the grid diameter sqrt(19), so the last step is complete.
    const double eps_max = 5.0;
    StepCurve d = symmetry_order_curve(cloud, eps_max);
    auto crit = critical_distances(pairwise_distances(cloud));
    CHECK(d.breakpoints[0] == 0.0);
    for (std::size_t k = 1; k < d.breakpoints.size(); ++k) {
      CHECK(std::find(crit.begin(), crit.end(), d.breakpoints[k]) != crit.end());
      CHECK(d.breakpoints[k] < eps_max);
    }
    for (const auto& v : d.values) {
      REQUIRE(v.has_value());
      CHECK(*v >= 0.0);
    }
    // Past the diameter the graph is complete.
    CHECK(*d.values.back() == doctest::Approx(std::log2(720.0)).epsilon(1e-9));
  }
}

TEST_CASE("gamma dominates delta on connected steps") {
  std::mt19937 rng(62);
  for (int t = 0; t < 15; ++t) {
    PointCloud cloud = oracle::random_cloud(rng, 6);
    StepCurve d = symmetry_order_curve(cloud, 4.0);
    StepCurve g = symmetry_degree_curve(cloud, 4.0);
    REQUIRE(d.pieces() == g.pieces());
    DistanceMatrix dm = pairwise_distances(cloud);
    for (std::size_t k = 0; k < d.pieces(); ++k) {
      Graph step = proximity_graph(dm, d.piece_start(k));
      if (connected_components(step).size() != 1) continue;
      REQUIRE(g.values[k].has_value());
      CHECK(*g.values[k] >= *d.values[k] - 1e-9);
    }
  }
}

TEST_CASE("scale equivariance under dyadic scaling") {
  std::mt19937 rng(63);
  for (double s : {2.0, 0.25}) {
    PointCloud cloud = oracle::random_cloud(rng, 6);
    PointCloud scaled = cloud;
    for (auto& p : scaled.points)
      for (auto& x : p) x *= s;
    StepCurve a = symmetry_order_curve(cloud, 4.0);
    StepCurve b = symmetry_order_curve(scaled, 4.0 * s);
    REQUIRE(a.pieces() == b.pieces());
    for (std::size_t k = 0; k < a.breakpoints.size(); ++k)
      CHECK(b.breakpoints[k] == a.breakpoints[k] * s);
    CHECK(b.domain_end == a.domain_end * s);
    for (std::size_t k = 0; k < a.pieces(); ++k) CHECK(*a.values[k] == *b.values[k]);
  }
}

TEST_CASE("caps annotate or abort depending on options") {
  PointCloud cloud = unit_square();
  CurveOptions strict;
  strict.search.node_cap = 2;
  CHECK_THROWS_AS(symmetry_order_curve(cloud, 3.0, strict), resource_error);

  CurveOptions lax = strict;
  lax.annotate_errors = true;
  StepCurve d = symmetry_order_curve(cloud, 3.0, lax);
  CHECK(!d.warnings.empty());
  bool any_undefined = false;
  for (const auto& v : d.values)
    if (!v) any_undefined = true;
  CHECK(any_undefined);

  // Tiny enumeration cap: symmetry degree gives up on the K4 step.
  CurveOptions small_enum;
  small_enum.enum_cap = 10;
  small_enum.annotate_errors = true;
  StepCurve g = symmetry_degree_curve(cloud, 3.0, small_enum);
  CHECK(!g.values[2].has_value());
  CHECK(!g.warnings.empty());
}

TEST_CASE("longest plateau picks the longest constant positive run") {
  StepCurve c;
  c.breakpoints = {0.0, 1.0, 2.5};
  c.values = {5.0, 3.0, 7.0};
  c.domain_end = 3.0;
  Plateau p = longest_plateau(c);
  CHECK(p.start == 1.0);
  CHECK(p.end == 2.5);
  CHECK(p.value == 3.0);

  Plateau whole = longest_plateau(flat(4.0, 0.0, 3.0));
  CHECK(whole.start == 0.0);
  CHECK(whole.end == 3.0);
  CHECK(whole.length() == 3.0);

  StepCurve undef;
  undef.breakpoints = {0.0};
  undef.values = {std::nullopt};
  undef.domain_end = 1.0;
  CHECK_THROWS_AS(longest_plateau(undef), feature_error);

  StepCurve zero = flat(0.0, 0.0, 2.0);
  CHECK_THROWS_AS(longest_plateau(zero), feature_error);
}

TEST_CASE("plateau merges equal-value neighbors and breaks ties early") {
  StepCurve c;
  c.breakpoints = {0.0, 1.0, 2.0, 3.0};
  c.values = {2.0, 2.0 + 1e-12, 9.0, 9.0};
  c.domain_end = 4.0;
  // Pieces 0+1 merge within tolerance into [0,2), same length as [2,4).
  Plateau p = longest_plateau(c);
  CHECK(p.start == 0.0);
  CHECK(p.end == 2.0);
  CHECK(p.value == 2.0);
}

TEST_CASE("effective length worked examples") {
  StepCurve lone;
  lone.breakpoints = {0.0, 1.0, 2.5};
  lone.values = {std::nullopt, 3.0, std::nullopt};
  lone.domain_end = 3.0;
  PlateauFeature f = effective_length(lone);
  CHECK(f.region_start == 1.0);
  CHECK(f.region_end == 2.5);
  CHECK(f.area == doctest::Approx(4.5).epsilon(1e-12));
  CHECK(f.effective_len == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(f.sup == doctest::Approx(2.5).epsilon(1e-12));

  StepCurve steps;
  steps.breakpoints = {1.0, 1.4, 2.2};
  steps.values = {6.0, 3.0, 1.0};
  steps.domain_end = 2.4;
  PlateauFeature g = effective_length(steps);
  CHECK(g.plateau.value == 3.0);
  CHECK(g.region_start == 1.0);
  CHECK(g.region_end == 2.4);
  CHECK(g.area == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(g.effective_len == doctest::Approx(5.0 / 3.0).epsilon(1e-12));
  CHECK(g.sup == doctest::Approx(1.0 + 5.0 / 3.0).epsilon(1e-12));

  PlateauFeature h = effective_length(flat(7.0, 0.0, 2.25));
  CHECK(h.sup == doctest::Approx(2.25).epsilon(1e-12));
}

TEST_CASE("region stops at undefined and zero pieces") {
  StepCurve c;
  c.breakpoints = {0.0, 0.5, 1.0, 2.0, 2.5};
  c.values = {4.0, 0.0, 5.0, 5.0, std::nullopt};
  c.domain_end = 3.0;
  PlateauFeature f = effective_length(c);
  CHECK(f.plateau.start == 1.0);
  CHECK(f.plateau.end == 2.5);
  // Zero piece on the left and undefined piece on the right bound the region.
  CHECK(f.region_start == 1.0);
  CHECK(f.region_end == 2.5);
  CHECK(f.area == doctest::Approx(7.5).epsilon(1e-12));
}

TEST_CASE("ell feature is the mean of the two sups") {
  CHECK(ell_feature(flat(5.0, 0.0, 3.0), flat(7.0, 0.0, 3.0)) ==
        doctest::Approx(3.0).epsilon(1e-12));
  CHECK(ell_feature(flat(5.0, 0.0, 2.2), flat(7.0, 0.0, 2.0)) ==
        doctest::Approx(2.1).epsilon(1e-12));
}

TEST_CASE("curve tables round-trip") {
  StepCurve c;
  c.breakpoints = {0.0, 1.0, std::sqrt(2.0)};
  c.values = {std::log2(24.0), std::nullopt, 3.0};
  c.domain_end = 3.0;
  c.warnings = {"eps 1: something gave up"};
  const std::string text = io::curve_table(c, {"config deadbeef", "test curve"});
  std::istringstream in(text);
  StepCurve back = io::parse_curve_table(in);
  CHECK(back.breakpoints == c.breakpoints);
  CHECK(back.domain_end == c.domain_end);
  REQUIRE(back.values.size() == c.values.size());
  for (std::size_t k = 0; k < c.values.size(); ++k) CHECK(back.values[k] == c.values[k]);
  CHECK(back.warnings == c.warnings);
}
