#include "persym/svg.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

namespace persym::svg {

namespace {

// Pixel coordinates get two decimals; that is plenty and keeps files stable.
std::string px(double v) {
  std::array<char, 32> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::fixed, 2);
  return std::string(buf.data(), res.ptr);
}

std::string open_svg(double w, double h) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(w) << "\" height=\"" << px(h)
     << "\" viewBox=\"0 0 " << px(w) << ' ' << px(h) << "\" font-family=\"sans-serif\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return os.str();
}

void line(std::ostringstream& os, double x1, double y1, double x2, double y2,
          const char* stroke, double width = 1.0) {
  os << "<line x1=\"" << px(x1) << "\" y1=\"" << px(y1) << "\" x2=\"" << px(x2) << "\" y2=\""
     << px(y2) << "\" stroke=\"" << stroke << "\" stroke-width=\"" << px(width) << "\"/>\n";
}

void text(std::ostringstream& os, double x, double y, const std::string& s, int size = 11,
          const char* anchor = "start", const char* fill = "#333") {
  os << "<text x=\"" << px(x) << "\" y=\"" << px(y) << "\" font-size=\"" << size
     << "\" text-anchor=\"" << anchor << "\" fill=\"" << fill << "\">" << s << "</text>\n";
}

std::string tick_label(double v) {
  // Axis labels want short numbers, not full round-trip precision.
  std::array<char, 32> buf;
  const auto res =
      std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 4);
  return std::string(buf.data(), res.ptr);
}

}  // namespace

std::string barcode_chart(const std::vector<io::BarRecord>& records, double eps_max) {
  const double ml = 50, mr = 110, mt = 28, mb = 44, row_h = 16;
  const double plot_w = 560;
  const double w = ml + plot_w + mr;
  const double h = mt + std::max<std::size_t>(records.size(), 1) * row_h + mb;
  auto sx = [&](double t) { return ml + (eps_max > 0 ? t / eps_max : 0.0) * plot_w; };

  std::ostringstream os;
  os << open_svg(w, h);
  text(os, ml, 16, "automorphism persistence barcode", 13);
  // Axis with a tick per distinct finite threshold.
  const double axis_y = h - mb + 8;
  line(os, ml, axis_y, ml + plot_w, axis_y, "#333");
  std::set<double> ticks{0.0, eps_max};
  for (const auto& rec : records) {
    ticks.insert(rec.birth_threshold);
    if (rec.death_threshold) ticks.insert(*rec.death_threshold);
  }
  for (double t : ticks) {
    line(os, sx(t), axis_y, sx(t), axis_y + 4, "#333");
    text(os, sx(t), axis_y + 16, tick_label(t), 9, "middle");
  }
  text(os, ml + plot_w / 2, h - 6, "threshold", 11, "middle");

  double y = mt;
  for (const auto& rec : records) {
    const double x0 = sx(rec.birth_threshold);
    const double x1 = rec.death_threshold ? sx(*rec.death_threshold) : ml + plot_w;
    const char* color = rec.death_threshold ? "#35669f" : "#9f4435";
    os << "<rect x=\"" << px(x0) << "\" y=\"" << px(y + 4) << "\" width=\""
       << px(std::max(x1 - x0, 1.5)) << "\" height=\"8\" fill=\"" << color << "\"/>\n";
    std::string label = "[" + std::to_string(rec.birth_index) + "," +
                        (rec.death_index ? std::to_string(*rec.death_index) : "inf") + ") x" +
                        rec.multiplicity.get_str();
    text(os, ml + plot_w + 8, y + 12, label, 10);
    y += row_h;
  }
  os << "</svg>\n";
  return os.str();
}

namespace {

void step_paths(std::ostringstream& os, const StepCurve& c,
                const std::function<double(double)>& sx,
                const std::function<double(double)>& sy, const char* color) {
  std::string d;
  bool open = false;
  for (std::size_t k = 0; k < c.pieces(); ++k) {
    if (!c.values[k]) {
      if (open) {
        os << "<path d=\"" << d << "\" fill=\"none\" stroke=\"" << color
           << "\" stroke-width=\"1.6\"/>\n";
        d.clear();
        open = false;
      }
      continue;
    }
    const double y = sy(*c.values[k]);
    const double xa = sx(c.piece_start(k));
    const double xb = sx(c.piece_end(k));
    if (!open) {
      d += "M" + px(xa) + " " + px(y);
      open = true;
    } else {
      d += " V" + px(y);
    }
    d += " H" + px(xb);
  }
  if (open)
    os << "<path d=\"" << d << "\" fill=\"none\" stroke=\"" << color
       << "\" stroke-width=\"1.6\"/>\n";
}

}  // namespace

std::string curve_chart(const StepCurve& delta, const StepCurve& gamma) {
  const double ml = 54, mr = 24, mt = 30, mb = 44, plot_w = 600, plot_h = 280;
  const double w = ml + plot_w + mr, h = mt + plot_h + mb;
  const double x0 = delta.breakpoints.empty() ? 0.0 : delta.breakpoints.front();
  const double x1 = delta.domain_end;
  double vmax = 1.0;
  for (const auto* c : {&delta, &gamma})
    for (const auto& v : c->values)
      if (v) vmax = std::max(vmax, *v);
  auto sx = [&](double t) { return ml + (t - x0) / (x1 - x0) * plot_w; };
  auto sy = [&](double v) { return mt + plot_h - v / (vmax * 1.05) * plot_h; };

  std::ostringstream os;
  os << open_svg(w, h);
  line(os, ml, mt + plot_h, ml + plot_w, mt + plot_h, "#333");
  line(os, ml, mt, ml, mt + plot_h, "#333");
  for (int k = 0; k <= 6; ++k) {
    const double t = x0 + (x1 - x0) * k / 6.0;
    line(os, sx(t), mt + plot_h, sx(t), mt + plot_h + 4, "#333");
    text(os, sx(t), mt + plot_h + 16, tick_label(t), 9, "middle");
  }
  for (int k = 0; k <= 5; ++k) {
    const double v = vmax * 1.05 * k / 5.0;
    line(os, ml - 4, sy(v), ml, sy(v), "#333");
    text(os, ml - 8, sy(v) + 3, tick_label(v), 9, "end");
  }
  text(os, ml + plot_w / 2, h - 8, "threshold", 11, "middle");
  step_paths(os, delta, sx, sy, "#1f6fb2");
  if (!gamma.values.empty()) step_paths(os, gamma, sx, sy, "#c2562a");
  text(os, ml + 8, mt - 8, "symmetry order (log2 |Aut|)", 11, "start", "#1f6fb2");
  if (!gamma.values.empty())
    text(os, ml + 260, mt - 8, "symmetry degree (log2 Gamma)", 11, "start", "#c2562a");
  os << "</svg>\n";
  return os.str();
}

std::string study_chart(const StabilityReport& report) {
  const double ml = 60, mr = 60, mt = 30, mb = 44, plot_w = 560, plot_h = 280;
  const double w = ml + plot_w + mr, h = mt + plot_h + mb;
  std::ostringstream os;
  os << open_svg(w, h);
  const auto& rs = report.results;
  if (rs.empty()) {
    text(os, w / 2, h / 2, "no molecules", 13, "middle");
    os << "</svg>\n";
    return os.str();
  }
  double nmin = rs.front().n, nmax = rs.back().n;
  if (nmin == nmax) {
    nmin -= 1;
    nmax += 1;
  }
  double emin = 0, emax = 1, rmin = 0, rmax = 1;
  bool have_e = false, first_r = true;
  for (const auto& r : rs) {
    if (r.energy) {
      if (!have_e) {
        emin = emax = *r.energy;
        have_e = true;
      }
      emin = std::min(emin, *r.energy);
      emax = std::max(emax, *r.energy);
    }
    if (first_r) {
      rmin = rmax = r.ratio;
      first_r = false;
    }
    rmin = std::min(rmin, r.ratio);
    rmax = std::max(rmax, r.ratio);
  }
  auto pad = [](double& a, double& b) {
    const double margin = (b - a) > 0 ? (b - a) * 0.08 : 0.5;
    a -= margin;
    b += margin;
  };
  pad(emin, emax);
  pad(rmin, rmax);
  auto sx = [&](double n) { return ml + (n - nmin) / (nmax - nmin) * plot_w; };
  auto sye = [&](double e) { return mt + plot_h - (e - emin) / (emax - emin) * plot_h; };
  auto syr = [&](double r) { return mt + plot_h - (r - rmin) / (rmax - rmin) * plot_h; };

  line(os, ml, mt + plot_h, ml + plot_w, mt + plot_h, "#333");
  line(os, ml, mt, ml, mt + plot_h, "#8a3a2a");
  line(os, ml + plot_w, mt, ml + plot_w, mt + plot_h, "#1f6fb2");
  for (const auto& r : rs) {
    line(os, sx(r.n), mt + plot_h, sx(r.n), mt + plot_h + 4, "#333");
    text(os, sx(r.n), mt + plot_h + 16, std::to_string(r.n), 9, "middle");
  }
  for (int k = 0; k <= 4; ++k) {
    const double e = emin + (emax - emin) * k / 4.0;
    text(os, ml - 8, sye(e) + 3, tick_label(e), 9, "end", "#8a3a2a");
    const double rv = rmin + (rmax - rmin) * k / 4.0;
    text(os, ml + plot_w + 8, syr(rv) + 3, tick_label(rv), 9, "start", "#1f6fb2");
  }
  text(os, ml + plot_w / 2, h - 8, "atom count", 11, "middle");
  text(os, ml, mt - 8, "energy (eV/atom)", 11, "start", "#8a3a2a");
  text(os, ml + plot_w, mt - 8, "ratio R", 11, "end", "#1f6fb2");

  std::string epath, rpath;
  for (const auto& r : rs) {
    if (r.energy) {
      epath += (epath.empty() ? "M" : " L") + px(sx(r.n)) + " " + px(sye(*r.energy));
      os << "<circle cx=\"" << px(sx(r.n)) << "\" cy=\"" << px(sye(*r.energy))
         << "\" r=\"3\" fill=\"#8a3a2a\"/>\n";
    }
    rpath += (rpath.empty() ? "M" : " L") + px(sx(r.n)) + " " + px(syr(r.ratio));
    os << "<circle cx=\"" << px(sx(r.n)) << "\" cy=\"" << px(syr(r.ratio))
       << "\" r=\"3\" fill=\"#1f6fb2\"/>\n";
  }
  if (!epath.empty())
    os << "<path d=\"" << epath << "\" fill=\"none\" stroke=\"#8a3a2a\" stroke-width=\"1.4\"/>\n";
  os << "<path d=\"" << rpath << "\" fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"1.4\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace persym::svg
