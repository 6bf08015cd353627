#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "persym/cloud.hpp"
#include "persym/curves.hpp"

namespace persym {

struct MoleculeRecord {
  std::string name;
  std::string xyz_path;               // ignored when cloud is present
  std::optional<PointCloud> cloud;    // lets tests inject geometry directly
  std::optional<double> energy;       // heat of formation, eV/atom
};

double stability_ratio(double ell, int n);

// Standard Pearson correlation. Zero variance on either side raises
// numeric_error naming the flat side.
double pearson(const std::vector<double>& xs, const std::vector<double>& ys);

// Ordinary least squares fit ys ~ slope * xs + intercept.
std::pair<double, double> least_squares(const std::vector<double>& xs,
                                        const std::vector<double>& ys);

struct MoleculeResult {
  std::string name;
  int n = 0;
  double ell = 0.0;
  double ratio = 0.0;          // ell / n
  double sup_delta = 0.0;
  double sup_gamma = 0.0;
  std::optional<double> energy;
};

struct StabilityReport {
  std::vector<MoleculeResult> results;   // sorted by n, then name
  std::vector<std::string> failures;     // "name: reason"
  std::optional<double> correlation;     // ratio vs energy, over results with energy
  std::optional<double> slope;
  std::optional<double> intercept;
};

struct StudyOptions {
  double eps_max = 3.0;
  CurveOptions curve;
  bool parallel = true;
};

// Per-molecule curves -> ell -> R, then correlation and fit of energy
// against R over the molecules that both succeeded and carry an energy.
// Failures are collected, never fatal; correlation needs >= 2 such
// molecules and nonzero variance, else it stays empty (with a failure
// note for the reason).
StabilityReport run_study(const std::vector<MoleculeRecord>& molecules,
                          const StudyOptions& opts = {});

}  // namespace persym
