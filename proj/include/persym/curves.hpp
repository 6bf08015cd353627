#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "persym/autsearch.hpp"
#include "persym/cloud.hpp"

namespace persym {

// Piecewise-constant function of the proximity threshold. Piece k covers
// [breakpoints[k], breakpoints[k+1]), the last piece ends at domain_end.
// nullopt marks intervals where the quantity is undefined (symmetry degree
// of an edgeless graph, or a step skipped after a cap with annotate_errors).
struct StepCurve {
  std::vector<double> breakpoints;
  std::vector<std::optional<double>> values;
  double domain_end = 0.0;
  std::vector<std::string> warnings;

  std::size_t pieces() const { return values.size(); }
  double piece_start(std::size_t k) const { return breakpoints[k]; }
  double piece_end(std::size_t k) const {
    return k + 1 < breakpoints.size() ? breakpoints[k + 1] : domain_end;
  }
  std::optional<double> value_at(double eps) const;
};

struct CurveOptions {
  double tol = 1e-9;
  std::uint64_t enum_cap = 1'000'000;
  AutSearchOptions search;
  // When set, a step whose computation hits a cap becomes an undefined piece
  // with a warning instead of aborting the whole curve. The library default
  // is to fail loudly, naming the offending threshold.
  bool annotate_errors = false;
};

// delta(eps) = log2 |Aut(G_eps)|, evaluated exactly at every critical
// distance of the cloud up to eps_max.
StepCurve symmetry_order_curve(const PointCloud& cloud, double eps_max,
                               const CurveOptions& opts = {});

// gamma(eps) = log2 Gamma(G_eps), undefined where Gamma = 0 (no edges).
StepCurve symmetry_degree_curve(const PointCloud& cloud, double eps_max,
                                const CurveOptions& opts = {});

struct Plateau {
  double start = 0.0;
  double end = 0.0;
  double value = 0.0;

  double length() const { return end - start; }
};

// Longest maximal run on which the curve is defined, positive, and constant
// (values within value_tol of the run's first value). Ties go to the
// earliest start. feature_error if no piece qualifies.
Plateau longest_plateau(const StepCurve& c, double value_tol = 1e-9);

struct PlateauFeature {
  Plateau plateau;
  double region_start = 0.0;  // maximal defined-and-positive interval
  double region_end = 0.0;    // containing the plateau
  double area = 0.0;          // integral of the curve over the region
  double effective_len = 0.0; // area / plateau value
  double sup = 0.0;           // region_start + effective_len
};

PlateauFeature effective_length(const StepCurve& c, double value_tol = 1e-9);

// The molecule-level feature: mean of the two sup values.
double ell_feature(const StepCurve& delta, const StepCurve& gamma,
                   double value_tol = 1e-9);

}  // namespace persym
