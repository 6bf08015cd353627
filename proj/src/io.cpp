#include "persym/io.hpp"

#include <array>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "persym/errors.hpp"

namespace persym::io {

namespace {

using ordered_json = nlohmann::ordered_json;

double parse_number(std::string_view tok, const std::string& what) {
  double v = 0.0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
    throw input_error("bad " + what + ": '" + std::string(tok) + "'");
  return v;
}

long parse_int(std::string_view tok, const std::string& what) {
  long v = 0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
    throw input_error("bad " + what + ": '" + std::string(tok) + "'");
  return v;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

// Strips comments and surrounding whitespace; empty result means skip.
std::string data_part(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

PointCloud parse_xyz(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw input_error("xyz: missing atom count line");
  const auto head = tokens_of(line);
  if (head.size() != 1) throw input_error("xyz: first line must be the atom count");
  const long n = parse_int(head[0], "xyz atom count");
  if (n <= 0) throw input_error("xyz: atom count must be positive");
  if (!std::getline(in, line)) throw input_error("xyz: missing comment line");
  PointCloud cloud;
  cloud.points.reserve(static_cast<std::size_t>(n));
  while (static_cast<long>(cloud.points.size()) < n) {
    if (!std::getline(in, line))
      throw input_error("xyz: expected " + std::to_string(n) + " atoms, got " +
                        std::to_string(cloud.points.size()));
    const auto toks = tokens_of(line);
    if (toks.empty()) continue;  // stray blank line
    if (toks.size() < 4) throw input_error("xyz: atom line needs symbol and 3 coordinates");
    cloud.labels.push_back(toks[0]);
    cloud.points.push_back({parse_number(toks[1], "x coordinate"),
                            parse_number(toks[2], "y coordinate"),
                            parse_number(toks[3], "z coordinate")});
  }
  validate(cloud);
  return cloud;
}

PointCloud load_xyz(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  try {
    return parse_xyz(in);
  } catch (const input_error& e) {
    throw input_error(path + ": " + e.what());
  }
}

Graph ParsedEdgeList::graph() const { return Graph(n, edges); }

WeightedGraph ParsedEdgeList::weighted_graph() const {
  if (!has_weights) throw input_error("edge list carries no weights");
  return WeightedGraph{n, edges, weights};
}

ParsedEdgeList parse_edge_list(std::istream& in) {
  ParsedEdgeList out;
  std::string line;
  bool have_n = false;
  bool first_edge = true;
  while (std::getline(in, line)) {
    const std::string body = data_part(line);
    if (body.empty()) continue;
    const auto toks = tokens_of(body);
    if (!have_n) {
      if (toks.size() != 1) throw input_error("edge list: first line must be the vertex count");
      out.n = static_cast<int>(parse_int(toks[0], "vertex count"));
      if (out.n < 0) throw input_error("edge list: negative vertex count");
      have_n = true;
      continue;
    }
    if (toks.size() != 2 && toks.size() != 3)
      throw input_error("edge list: expected 'u v' or 'u v weight', got '" + body + "'");
    const bool weighted = toks.size() == 3;
    if (first_edge) {
      out.has_weights = weighted;
      first_edge = false;
    } else if (weighted != out.has_weights) {
      throw input_error("edge list: mixed weighted and unweighted lines");
    }
    out.edges.emplace_back(static_cast<int>(parse_int(toks[0], "edge endpoint")),
                           static_cast<int>(parse_int(toks[1], "edge endpoint")));
    if (weighted) out.weights.push_back(parse_number(toks[2], "edge weight"));
  }
  if (!have_n) throw input_error("edge list: empty input");
  return out;
}

ParsedEdgeList load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  try {
    return parse_edge_list(in);
  } catch (const input_error& e) {
    throw input_error(path + ": " + e.what());
  }
}

std::vector<MoleculeRecord> parse_manifest(std::istream& in, const std::string& base_dir) {
  std::vector<MoleculeRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    const std::string body = data_part(line);
    if (body.empty()) continue;
    const auto toks = tokens_of(body);
    if (toks.size() != 3)
      throw input_error("manifest: expected 'name xyz-path energy', got '" + body + "'");
    MoleculeRecord rec;
    rec.name = toks[0];
    rec.xyz_path = toks[1];
    if (!rec.xyz_path.empty() && rec.xyz_path[0] != '/' && !base_dir.empty())
      rec.xyz_path = base_dir + "/" + rec.xyz_path;
    if (toks[2] != "-") rec.energy = parse_number(toks[2], "energy");
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<MoleculeRecord> load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  const std::string dir = std::filesystem::path(path).parent_path().string();
  try {
    return parse_manifest(in, dir);
  } catch (const input_error& e) {
    throw input_error(path + ": " + e.what());
  }
}

void atomic_write_file(const std::string& path, std::string_view content) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp(target);
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw input_error("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw input_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) throw input_error("cannot move " + tmp.string() + " into place: " + ec.message());
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string format_double(double v) {
  std::array<char, 64> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

std::string config_hash(const RunConfig& cfg) {
  const std::uint64_t h = fnv1a(cfg.canonical_string());
  std::array<char, 17> buf{};
  for (int k = 0; k < 16; ++k)
    buf[static_cast<std::size_t>(15 - k)] = "0123456789abcdef"[(h >> (4 * k)) & 0xf];
  return std::string(buf.data(), 16);
}

std::string curve_table(const StepCurve& c, const std::vector<std::string>& header) {
  std::ostringstream os;
  for (const auto& h : header) os << "# " << h << '\n';
  os << "# columns: eps_start eps_end value defined\n";
  for (const auto& w : c.warnings) os << "# warning " << w << '\n';
  for (std::size_t k = 0; k < c.pieces(); ++k) {
    os << format_double(c.piece_start(k)) << ' ' << format_double(c.piece_end(k)) << ' ';
    if (c.values[k])
      os << format_double(*c.values[k]) << " 1\n";
    else
      os << "- 0\n";
  }
  return os.str();
}

StepCurve parse_curve_table(std::istream& in) {
  StepCurve c;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("# warning ", 0) == 0) {
      c.warnings.push_back(line.substr(10));
      continue;
    }
    const std::string body = data_part(line);
    if (body.empty()) continue;
    const auto toks = tokens_of(body);
    if (toks.size() != 4) throw input_error("curve table: bad row '" + body + "'");
    c.breakpoints.push_back(parse_number(toks[0], "eps_start"));
    c.domain_end = parse_number(toks[1], "eps_end");
    if (toks[3] == "1")
      c.values.push_back(parse_number(toks[2], "curve value"));
    else
      c.values.push_back(std::nullopt);
  }
  if (c.values.empty()) throw input_error("curve table: no rows");
  return c;
}

std::vector<BarRecord> bar_records(const Barcode& bc, const std::vector<double>& thresholds) {
  std::vector<BarRecord> out;
  out.reserve(bc.intervals.size());
  for (const auto& bar : bc.intervals) {
    BarRecord rec;
    rec.birth_index = bar.birth;
    rec.birth_threshold = thresholds.at(static_cast<std::size_t>(bar.birth));
    if (bar.death) {
      rec.death_index = *bar.death;
      rec.death_threshold = thresholds.at(static_cast<std::size_t>(*bar.death));
    }
    rec.multiplicity = bar.multiplicity;
    out.push_back(std::move(rec));
  }
  return out;
}

std::string barcode_records_text(const std::vector<BarRecord>& records) {
  ordered_json arr = ordered_json::array();
  for (const auto& rec : records) {
    ordered_json j;
    j["birth_index"] = rec.birth_index;
    if (rec.death_index)
      j["death_index"] = *rec.death_index;
    else
      j["death_index"] = "inf";
    j["birth_threshold"] = rec.birth_threshold;
    if (rec.death_threshold)
      j["death_threshold"] = *rec.death_threshold;
    else
      j["death_threshold"] = nullptr;
    // Decimal string: multiplicities outgrow every fixed-width integer as
    // soon as a step has many isolated points.
    j["multiplicity"] = rec.multiplicity.get_str();
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::vector<BarRecord> parse_barcode_records(std::istream& in) {
  ordered_json arr;
  try {
    arr = ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("barcode records: ") + e.what());
  }
  if (!arr.is_array()) throw input_error("barcode records: expected a JSON array");
  std::vector<BarRecord> out;
  for (const auto& j : arr) {
    BarRecord rec;
    rec.birth_index = j.at("birth_index").get<int>();
    const auto& death = j.at("death_index");
    if (death.is_number_integer()) rec.death_index = death.get<int>();
    rec.birth_threshold = j.at("birth_threshold").get<double>();
    const auto& dt = j.at("death_threshold");
    if (!dt.is_null()) rec.death_threshold = dt.get<double>();
    const auto& mult = j.at("multiplicity");
    if (mult.is_string())
      rec.multiplicity = mpz_class(mult.get<std::string>(), 10);
    else
      rec.multiplicity = static_cast<unsigned long>(mult.get<std::uint64_t>());
    out.push_back(std::move(rec));
  }
  return out;
}

std::string rank_table_text(const RankTable& rt, const std::vector<double>& thresholds) {
  std::ostringstream os;
  os << "# r(i,j): count of automorphisms at step j surviving back to step i\n";
  os << "# thresholds:";
  for (double t : thresholds) os << ' ' << format_double(t);
  os << '\n';
  for (int i = 0; i < rt.steps(); ++i) {
    os << "i=" << i << ':';
    for (int pad = 0; pad < i; ++pad) os << " .";
    for (int j = i; j < rt.steps(); ++j) os << ' ' << rt.r(i, j).get_str();
    os << '\n';
  }
  return os.str();
}

std::string group_report_text(const PermutationGroup& grp) {
  std::ostringstream os;
  os << "order " << grp.order().get_str() << '\n';
  os << "log2_order " << format_double(grp.log2_order()) << '\n';
  const auto& gens = grp.generators();
  os << "generators " << gens.size() << '\n';
  for (const auto& g : gens) os << "  " << g.cycle_string() << '\n';
  return os.str();
}

std::string study_report_text(const StabilityReport& report, const std::string& config_line) {
  std::ostringstream os;
  os << "# " << config_line << '\n';
  os << "name n ell ratio energy\n";
  for (const auto& r : report.results) {
    os << r.name << ' ' << r.n << ' ' << format_double(r.ell) << ' ' << format_double(r.ratio)
       << ' ' << (r.energy ? format_double(*r.energy) : std::string("-")) << '\n';
  }
  if (report.correlation)
    os << "correlation " << format_double(*report.correlation) << '\n';
  if (report.slope && report.intercept)
    os << "fit slope " << format_double(*report.slope) << " intercept "
       << format_double(*report.intercept) << '\n';
  for (const auto& f : report.failures) os << "note " << f << '\n';
  return os.str();
}

std::string study_records_text(const StabilityReport& report) {
  ordered_json j;
  j["molecules"] = ordered_json::array();
  for (const auto& r : report.results) {
    ordered_json m;
    m["name"] = r.name;
    m["n"] = r.n;
    m["ell"] = r.ell;
    m["ratio"] = r.ratio;
    m["sup_delta"] = r.sup_delta;
    m["sup_gamma"] = r.sup_gamma;
    if (r.energy)
      m["energy"] = *r.energy;
    else
      m["energy"] = nullptr;
    j["molecules"].push_back(std::move(m));
  }
  j["correlation"] = report.correlation ? ordered_json(*report.correlation) : ordered_json(nullptr);
  j["slope"] = report.slope ? ordered_json(*report.slope) : ordered_json(nullptr);
  j["intercept"] = report.intercept ? ordered_json(*report.intercept) : ordered_json(nullptr);
  j["failures"] = report.failures;
  return j.dump(2) + "\n";
}

StabilityReport parse_study_records(std::istream& in) {
  ordered_json j;
  try {
    j = ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("study records: ") + e.what());
  }
  StabilityReport report;
  for (const auto& m : j.at("molecules")) {
    MoleculeResult r;
    r.name = m.at("name").get<std::string>();
    r.n = m.at("n").get<int>();
    r.ell = m.at("ell").get<double>();
    r.ratio = m.at("ratio").get<double>();
    r.sup_delta = m.at("sup_delta").get<double>();
    r.sup_gamma = m.at("sup_gamma").get<double>();
    if (!m.at("energy").is_null()) r.energy = m.at("energy").get<double>();
    report.results.push_back(std::move(r));
  }
  if (!j.at("correlation").is_null()) report.correlation = j.at("correlation").get<double>();
  if (!j.at("slope").is_null()) report.slope = j.at("slope").get<double>();
  if (!j.at("intercept").is_null()) report.intercept = j.at("intercept").get<double>();
  report.failures = j.at("failures").get<std::vector<std::string>>();
  return report;
}

}  // namespace persym::io

namespace persym {

std::string RunConfig::canonical_string() const {
  return "eps_max=" + io::format_double(eps_max) + ";tol=" + io::format_double(tol) +
         ";enum_cap=" + std::to_string(enum_cap) + ";node_cap=" + std::to_string(node_cap);
}

}  // namespace persym
