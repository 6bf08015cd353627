// persym: persistent automorphism toolkit.
//
// Subcommands:
//   aut        group of one graph (edge list, or xyz + --eps)
//   curves     symmetry order/degree curves of a point cloud
//   barcode    rank table and interval decomposition of a filtration
//   stability  multi-molecule feature study from a manifest
//
// Exit codes: 0 ok, 2 bad input, 3 resource cap, 1 anything else.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "persym/autsearch.hpp"
#include "persym/cloud.hpp"
#include "persym/config.hpp"
#include "persym/curves.hpp"
#include "persym/errors.hpp"
#include "persym/filtration.hpp"
#include "persym/io.hpp"
#include "persym/persist.hpp"
#include "persym/stability.hpp"
#include "persym/svg.hpp"

namespace {

using namespace persym;

namespace fs = std::filesystem;

bool is_xyz(const std::string& path) { return fs::path(path).extension() == ".xyz"; }

std::string stem_of(const std::string& path) { return fs::path(path).stem().string(); }

OutputFormats parse_formats(const std::string& arg) {
  OutputFormats f{false, false, false};
  std::stringstream ss(arg);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "tabular")
      f.tabular = true;
    else if (tok == "records")
      f.records = true;
    else if (tok == "svg")
      f.svg = true;
    else if (!tok.empty())
      throw input_error("unknown output format '" + tok + "' (want tabular, records, svg)");
  }
  if (!f.tabular && !f.records && !f.svg) throw input_error("no output format selected");
  return f;
}

void emit(const RunConfig& cfg, const std::string& name, const std::string& content) {
  fs::create_directories(cfg.out_dir);
  const std::string path = (fs::path(cfg.out_dir) / name).string();
  io::atomic_write_file(path, content);
  std::cout << "wrote " << path << "\n";
}

std::string svg_with_hash(const std::string& svg_text, const std::string& hash) {
  return "<!-- config " + hash + " -->\n" + svg_text;
}

int cmd_aut(const RunConfig& cfg, const std::string& input, bool have_eps, double eps) {
  Graph g = [&] {
    if (is_xyz(input)) {
      if (!have_eps) throw input_error("xyz input needs --eps to pick the proximity threshold");
      const PointCloud cloud = io::load_xyz(input);
      return proximity_graph(pairwise_distances(cloud), eps);
    }
    return io::load_edge_list(input).graph();
  }();
  const PermutationGroup grp = automorphism_group(g, {cfg.node_cap});
  std::cout << io::group_report_text(grp);
  return 0;
}

int cmd_curves(const RunConfig& cfg, const std::string& input) {
  const PointCloud cloud = io::load_xyz(input);
  CurveOptions copts{cfg.tol, cfg.enum_cap, {cfg.node_cap}, true};
  const StepCurve delta = symmetry_order_curve(cloud, cfg.eps_max, copts);
  const StepCurve gamma = symmetry_degree_curve(cloud, cfg.eps_max, copts);

  const std::string hash = io::config_hash(cfg);
  const std::string stem = stem_of(input);
  if (cfg.formats.tabular || cfg.formats.records) {
    emit(cfg, stem + "_delta.txt",
         io::curve_table(delta, {"config " + hash, "delta: log2 |Aut| of the proximity graph"}));
    emit(cfg, stem + "_gamma.txt",
         io::curve_table(gamma, {"config " + hash, "gamma: log2 of the symmetry degree"}));
  }
  if (cfg.formats.svg)
    emit(cfg, stem + "_curves.svg", svg_with_hash(svg::curve_chart(delta, gamma), hash));

  const auto any_defined = [](const StepCurve& c) {
    for (const auto& v : c.values)
      if (v) return true;
    return false;
  };
  if (!any_defined(delta) && !any_defined(gamma)) {
    std::cerr << "error: every threshold step failed under the configured caps\n";
    return 3;
  }
  return 0;
}

// Rows are computed here rather than through rank_table() so a cap hit
// mid-table still leaves the finished rows for a partial report.
int cmd_barcode(const RunConfig& cfg, const std::string& input) {
  Filtration filt;
  if (is_xyz(input)) {
    filt = build_filtration(io::load_xyz(input), cfg.eps_max, cfg.tol);
  } else {
    const io::ParsedEdgeList parsed = io::load_edge_list(input);
    if (!parsed.has_weights)
      throw input_error("barcode needs thresholds: use an xyz file or a weighted edge list");
    filt = build_filtration(parsed.weighted_graph(), cfg.eps_max, cfg.tol);
  }

  const int steps = filt.steps();
  RankTable rt(steps);
  std::string cap_note;
  int done_rows = 0;
  const AutSearchOptions sopts{cfg.node_cap};
  try {
    for (int i = 0; i < steps; ++i) {
      bool tail_is_one = false;
      for (int j = i; j < steps; ++j) {
        if (tail_is_one) {
          rt.set(i, j, 1);
          continue;
        }
        mpz_class order = persistent_image(filt, i, j, 0, sopts).order;
        tail_is_one = order == 1;
        rt.set(i, j, std::move(order));
      }
      done_rows = i + 1;
    }
  } catch (const resource_error& e) {
    cap_note = e.what();
  }

  const std::string hash = io::config_hash(cfg);
  const std::string stem = stem_of(input);
  if (!cap_note.empty()) {
    // Partial rank rows only; the decomposition needs the full table.
    std::string text = "# config " + hash + "\n# warning resource cap: " + cap_note + "\n" +
                       "# completed rows: " + std::to_string(done_rows) + " of " +
                       std::to_string(steps) + "\n";
    for (int i = 0; i < done_rows; ++i) {
      text += "i=" + std::to_string(i) + ":";
      for (int j = i; j < steps; ++j) text += " " + rt.r(i, j).get_str();
      text += "\n";
    }
    if (cfg.formats.tabular || cfg.formats.records) emit(cfg, stem + "_ranks.txt", text);
    std::cerr << "error: " << cap_note << "\n";
    return 3;
  }

  const Barcode bc = barcode(rt);
  const auto records = io::bar_records(bc, filt.thresholds);
  if (cfg.formats.tabular) {
    std::string text = "# config " + hash + "\n" + io::rank_table_text(rt, filt.thresholds) +
                       "# module " + qmodule_description(bc) + "\n";
    emit(cfg, stem + "_ranks.txt", text);
  }
  if (cfg.formats.records) emit(cfg, stem + "_barcode.json", io::barcode_records_text(records));
  if (cfg.formats.svg) {
    const double axis_end = std::max(cfg.eps_max, filt.thresholds.back());
    emit(cfg, stem + "_barcode.svg", svg_with_hash(svg::barcode_chart(records, axis_end), hash));
  }
  return 0;
}

int cmd_stability(const RunConfig& cfg, const std::string& manifest) {
  const std::vector<MoleculeRecord> molecules = io::load_manifest(manifest);
  if (molecules.size() < 2)
    throw input_error("stability study needs at least 2 molecules, manifest lists " +
                      std::to_string(molecules.size()));

  StudyOptions sopts;
  sopts.eps_max = cfg.eps_max;
  sopts.curve = CurveOptions{cfg.tol, cfg.enum_cap, {cfg.node_cap}, true};
  const StabilityReport report = run_study(molecules, sopts);

  const std::string hash = io::config_hash(cfg);
  if (cfg.formats.tabular)
    emit(cfg, "study_report.txt", io::study_report_text(report, "config " + hash));
  if (cfg.formats.records) emit(cfg, "study_records.json", io::study_records_text(report));
  if (cfg.formats.svg)
    emit(cfg, "study_chart.svg", svg_with_hash(svg::study_chart(report), hash));
  for (const auto& f : report.failures) std::cerr << "warning: " << f << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"persistent automorphism toolkit"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format_spec = "tabular,records,svg";
  app.add_option("--eps-max", cfg.eps_max, "largest proximity threshold")
      ->envname("PERSYM_EPS_MAX")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--tol", cfg.tol, "distance merge tolerance")
      ->envname("PERSYM_TOL")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--enum-cap", cfg.enum_cap, "largest group enumerated element by element")
      ->envname("PERSYM_ENUM_CAP")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--node-cap", cfg.node_cap, "automorphism search node budget")
      ->envname("PERSYM_NODE_CAP")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--out", cfg.out_dir, "output directory")
      ->envname("PERSYM_OUT")
      ->capture_default_str();
  app.add_option("--format", format_spec, "comma list of tabular,records,svg")
      ->envname("PERSYM_FORMAT")
      ->capture_default_str();

  std::string aut_input, curves_input, barcode_input, manifest_input;
  double aut_eps = 0.0;

  CLI::App* aut = app.add_subcommand("aut", "automorphism group of one graph");
  aut->add_option("input", aut_input, "edge-list or xyz file")->required();
  CLI::Option* eps_opt =
      aut->add_option("--eps", aut_eps, "proximity threshold for xyz input");

  CLI::App* curves = app.add_subcommand("curves", "symmetry curves of a point cloud");
  curves->add_option("input", curves_input, "xyz file")->required();

  CLI::App* barcode = app.add_subcommand("barcode", "persistence barcode of a filtration");
  barcode->add_option("input", barcode_input, "xyz file or weighted edge list")->required();

  CLI::App* stability = app.add_subcommand("stability", "fullerene stability study");
  stability->add_option("manifest", manifest_input, "study manifest file")->required();

  // Shared options are accepted after the subcommand too.
  for (CLI::App* sub : {aut, curves, barcode, stability}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    cfg.formats = parse_formats(format_spec);
    if (aut->parsed()) return cmd_aut(cfg, aut_input, eps_opt->count() > 0, aut_eps);
    if (curves->parsed()) return cmd_curves(cfg, curves_input);
    if (barcode->parsed()) return cmd_barcode(cfg, barcode_input);
    if (stability->parsed()) return cmd_stability(cfg, manifest_input);
    return 1;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
