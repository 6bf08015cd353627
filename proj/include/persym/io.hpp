#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "persym/cloud.hpp"
#include "persym/config.hpp"
#include "persym/curves.hpp"
#include "persym/group.hpp"
#include "persym/persist.hpp"
#include "persym/stability.hpp"

namespace persym::io {

// XYZ: count line, comment line, then "symbol x y z" records. Tolerant of
// extra whitespace and trailing columns; strict about the count.
PointCloud parse_xyz(std::istream& in);
PointCloud load_xyz(const std::string& path);

// Edge list: first non-comment line is the vertex count, then one
// "u v [weight]" per line, 0-indexed. Either every edge has a weight or
// none does.
struct ParsedEdgeList {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<double> weights;  // parallel to edges when has_weights
  bool has_weights = false;

  Graph graph() const;
  WeightedGraph weighted_graph() const;
};
ParsedEdgeList parse_edge_list(std::istream& in);
ParsedEdgeList load_edge_list(const std::string& path);

// Study manifest: "name xyz-path energy" per line, '#' comments, energy "-"
// for molecules without one. Relative paths resolve against base_dir.
std::vector<MoleculeRecord> parse_manifest(std::istream& in, const std::string& base_dir);
std::vector<MoleculeRecord> load_manifest(const std::string& path);

// Write-to-temp-then-rename in the destination directory.
void atomic_write_file(const std::string& path, std::string_view content);

std::uint64_t fnv1a(std::string_view s);
std::string config_hash(const RunConfig& cfg);  // 16 hex digits

// Shortest round-trip decimal form of a double ("inf" never appears here;
// callers encode undefined/infinite out of band).
std::string format_double(double v);

// -------- curve tables --------
// Tabular text: '#' header lines, then "eps_start eps_end value defined"
// rows; undefined rows carry "-" in the value column. Re-parsing recovers
// breakpoints, values and domain end exactly.
std::string curve_table(const StepCurve& c, const std::vector<std::string>& header);
StepCurve parse_curve_table(std::istream& in);

// -------- barcode records --------
struct BarRecord {
  int birth_index = 0;
  std::optional<int> death_index;
  double birth_threshold = 0.0;
  std::optional<double> death_threshold;
  mpz_class multiplicity;

  bool operator==(const BarRecord&) const = default;
};
std::vector<BarRecord> bar_records(const Barcode& bc, const std::vector<double>& thresholds);
std::string barcode_records_text(const std::vector<BarRecord>& records);  // JSON array
std::vector<BarRecord> parse_barcode_records(std::istream& in);

std::string rank_table_text(const RankTable& rt, const std::vector<double>& thresholds);

// -------- reports --------
std::string group_report_text(const PermutationGroup& grp);
std::string study_report_text(const StabilityReport& report, const std::string& config_line);
std::string study_records_text(const StabilityReport& report);  // JSON
StabilityReport parse_study_records(std::istream& in);

}  // namespace persym::io
