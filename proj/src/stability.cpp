#include "persym/stability.hpp"

#include <algorithm>
#include <cmath>
#include <future>

#include "persym/errors.hpp"
#include "persym/io.hpp"

namespace persym {

double stability_ratio(double ell, int n) {
  if (n < 1) throw input_error("atom count must be positive");
  if (!(ell > 0)) throw input_error("feature length must be positive");
  return ell / n;
}

namespace {

struct Moments {
  double mean_x = 0, mean_y = 0, var_x = 0, var_y = 0, cov = 0;
};

Moments moments(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size()) throw input_error("series length mismatch");
  if (xs.size() < 2) throw input_error("need at least two observations");
  Moments m;
  const double n = static_cast<double>(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k) {
    m.mean_x += xs[k];
    m.mean_y += ys[k];
  }
  m.mean_x /= n;
  m.mean_y /= n;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double dx = xs[k] - m.mean_x;
    const double dy = ys[k] - m.mean_y;
    m.var_x += dx * dx;
    m.var_y += dy * dy;
    m.cov += dx * dy;
  }
  return m;
}

}  // namespace

double pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
  const Moments m = moments(xs, ys);
  if (m.var_x == 0) throw numeric_error("first series has zero variance");
  if (m.var_y == 0) throw numeric_error("second series has zero variance");
  return std::clamp(m.cov / std::sqrt(m.var_x * m.var_y), -1.0, 1.0);
}

std::pair<double, double> least_squares(const std::vector<double>& xs,
                                        const std::vector<double>& ys) {
  const Moments m = moments(xs, ys);
  if (m.var_x == 0) throw numeric_error("regressor has zero variance");
  const double slope = m.cov / m.var_x;
  return {slope, m.mean_y - slope * m.mean_x};
}

namespace {

MoleculeResult study_one(const MoleculeRecord& rec, const StudyOptions& opts) {
  const PointCloud cloud = rec.cloud ? *rec.cloud : io::load_xyz(rec.xyz_path);
  validate(cloud);
  const StepCurve delta = symmetry_order_curve(cloud, opts.eps_max, opts.curve);
  const StepCurve gamma = symmetry_degree_curve(cloud, opts.eps_max, opts.curve);
  const PlateauFeature fd = effective_length(delta, opts.curve.tol);
  const PlateauFeature fg = effective_length(gamma, opts.curve.tol);
  MoleculeResult res;
  res.name = rec.name;
  res.n = cloud.size();
  res.sup_delta = fd.sup;
  res.sup_gamma = fg.sup;
  res.ell = (fd.sup + fg.sup) / 2.0;
  res.ratio = stability_ratio(res.ell, res.n);
  res.energy = rec.energy;
  return res;
}

}  // namespace

StabilityReport run_study(const std::vector<MoleculeRecord>& molecules,
                          const StudyOptions& opts) {
  StabilityReport report;
  std::vector<std::future<MoleculeResult>> futures;
  futures.reserve(molecules.size());
  for (const auto& rec : molecules) {
    futures.push_back(std::async(opts.parallel ? std::launch::async : std::launch::deferred,
                                 study_one, std::cref(rec), std::cref(opts)));
  }
  for (std::size_t k = 0; k < molecules.size(); ++k) {
    try {
      report.results.push_back(futures[k].get());
    } catch (const std::exception& e) {
      report.failures.push_back(molecules[k].name + ": " + e.what());
    }
  }
  std::sort(report.results.begin(), report.results.end(),
            [](const MoleculeResult& a, const MoleculeResult& b) {
              return std::tie(a.n, a.name) < std::tie(b.n, b.name);
            });
  std::vector<double> rs, es;
  for (const auto& res : report.results) {
    if (!res.energy) {
      report.failures.push_back(res.name + ": no energy given, excluded from correlation");
      continue;
    }
    rs.push_back(res.ratio);
    es.push_back(*res.energy);
  }
  if (rs.size() < 2) {
    report.failures.push_back("correlation skipped: fewer than 2 molecules with energy");
    return report;
  }
  try {
    report.correlation = pearson(rs, es);
    auto [slope, intercept] = least_squares(rs, es);
    report.slope = slope;
    report.intercept = intercept;
  } catch (const numeric_error& e) {
    report.failures.push_back(std::string("correlation skipped: ") + e.what());
  }
  return report;
}

}  // namespace persym
