#include "persym/curves.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "persym/errors.hpp"

namespace persym {

std::optional<double> StepCurve::value_at(double eps) const {
  if (breakpoints.empty() || eps < breakpoints.front() || eps >= domain_end) return std::nullopt;
  const auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), eps);
  return values[static_cast<std::size_t>(it - breakpoints.begin()) - 1];
}

namespace {

std::string format_eps(double eps) {
  std::ostringstream os;
  os.precision(12);
  os << eps;
  return os.str();
}

// Shared skeleton of the two curves: one evaluation per critical interval,
// no sampling anywhere.
StepCurve event_curve(const PointCloud& cloud, double eps_max, const CurveOptions& opts,
                      const std::function<std::optional<double>(const Graph&, StepCurve&, double)>& eval) {
  if (!(eps_max > 0)) throw input_error("eps_max must be positive");
  const DistanceMatrix d = pairwise_distances(cloud);
  StepCurve curve;
  curve.domain_end = eps_max;
  curve.breakpoints.push_back(0.0);
  for (double c : critical_distances(d, opts.tol)) {
    if (c < eps_max) curve.breakpoints.push_back(c);
  }
  for (double bk : curve.breakpoints) {
    const Graph g = proximity_graph(d, bk);
    try {
      curve.values.push_back(eval(g, curve, bk));
    } catch (const resource_error& e) {
      if (!opts.annotate_errors)
        throw resource_error(e.cap_name,
                             std::string(e.what()) + " at eps " + format_eps(bk));
      curve.values.push_back(std::nullopt);
      curve.warnings.push_back("eps " + format_eps(bk) + ": " + e.what());
    }
  }
  return curve;
}

}  // namespace

StepCurve symmetry_order_curve(const PointCloud& cloud, double eps_max,
                               const CurveOptions& opts) {
  return event_curve(cloud, eps_max, opts,
                     [&opts](const Graph& g, StepCurve&, double) -> std::optional<double> {
                       return log2_automorphism_order(g, opts.search);
                     });
}

StepCurve symmetry_degree_curve(const PointCloud& cloud, double eps_max,
                                const CurveOptions& opts) {
  return event_curve(
      cloud, eps_max, opts,
      [&opts](const Graph& g, StepCurve& curve, double bk) -> std::optional<double> {
        auto gamma = symmetry_degree(g, opts.enum_cap, opts.search);
        if (const auto* cap = std::get_if<CapExceeded>(&gamma)) {
          curve.warnings.push_back("eps " + format_eps(bk) +
                                   ": symmetry degree enumeration capped (component group order " +
                                   cap->order.get_str() + ")");
          return std::nullopt;
        }
        const mpz_class& value = std::get<mpz_class>(gamma);
        if (value == 0) return std::nullopt;  // edgeless: no degree defined
        return std::log2(value.get_d());
      });
}

Plateau longest_plateau(const StepCurve& c, double value_tol) {
  std::optional<Plateau> best;
  std::optional<Plateau> run;
  auto flush = [&]() {
    if (run && (!best || run->length() > best->length())) best = run;
    run.reset();
  };
  for (std::size_t k = 0; k < c.pieces(); ++k) {
    const auto& v = c.values[k];
    const bool qualifies = v.has_value() && *v > 0.0;
    if (!qualifies) {
      flush();
      continue;
    }
    if (run && std::abs(*v - run->value) <= value_tol) {
      run->end = c.piece_end(k);
      continue;
    }
    flush();
    run = Plateau{c.piece_start(k), c.piece_end(k), *v};
  }
  flush();
  if (!best) throw feature_error("curve has no positive constant interval");
  return *best;
}

PlateauFeature effective_length(const StepCurve& c, double value_tol) {
  PlateauFeature f;
  f.plateau = longest_plateau(c, value_tol);
  // Grow the surrounding region: maximal contiguous defined-and-positive
  // interval around the plateau, regardless of value.
  std::size_t lo = 0;
  while (c.piece_end(lo) <= f.plateau.start) ++lo;
  std::size_t hi = lo;
  while (c.piece_end(hi) < f.plateau.end) ++hi;
  auto qualifies = [&c](std::size_t k) {
    return c.values[k].has_value() && *c.values[k] > 0.0;
  };
  while (lo > 0 && qualifies(lo - 1)) --lo;
  while (hi + 1 < c.pieces() && qualifies(hi + 1)) ++hi;
  f.region_start = c.piece_start(lo);
  f.region_end = c.piece_end(hi);
  f.area = 0.0;
  for (std::size_t k = lo; k <= hi; ++k)
    f.area += *c.values[k] * (c.piece_end(k) - c.piece_start(k));
  f.effective_len = f.area / f.plateau.value;
  f.sup = f.region_start + f.effective_len;
  return f;
}

double ell_feature(const StepCurve& delta, const StepCurve& gamma, double value_tol) {
  const PlateauFeature fd = effective_length(delta, value_tol);
  const PlateauFeature fg = effective_length(gamma, value_tol);
  return (fd.sup + fg.sup) / 2.0;
}

}  // namespace persym
