#include "pdl/region.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "pdl/errors.hpp"
#include "pdl/format.hpp"

namespace pdl {

namespace {

void validate_scan_args(int resolution, std::span<const std::int64_t> n_list) {
  if (resolution < 2 || resolution > kMaxResolution)
    throw ValidationError("scan resolution must lie in [2, " + std::to_string(kMaxResolution) +
                          "]");
  if (n_list.empty()) throw ValidationError("scan needs a nonempty n list");
  for (std::int64_t n : n_list)
    if (n < 1) throw ValidationError("scan n values must be >= 1");
}

RegionGrid make_grid(int resolution, std::span<const std::int64_t> n_list) {
  RegionGrid g;
  g.resolution = resolution;
  g.n_list.assign(n_list.begin(), n_list.end());
  const std::size_t cells = static_cast<std::size_t>(resolution) * resolution;
  g.classification.resize(cells);
  g.q1.resize(cells);
  g.w.resize(cells * n_list.size());
  g.benefit.resize(cells * n_list.size());
  g.superadditive.resize(cells * n_list.size());
  return g;
}

void scan_cell(RegionGrid& g, int i, int j) {
  const ChannelParams p(g.p_h_at(i), g.p_v_at(j));
  const std::size_t cell = g.cell_index(i, j);
  const Classification cls = classify(p);
  const Q1Solution sol = solve_q1(p);
  g.classification[cell] = cls;
  g.q1[cell] = sol.q1;
  const bool gated = cls == Classification::Antidegradable || cls == Classification::Both;
  for (std::size_t t = 0; t < g.n_list.size(); ++t) {
    const std::int64_t n = g.n_list[t];
    const double w = w_n(p, n);
    const double ben = n >= 2 ? benefit_n(p, sol, n) : 0.0;
    const std::size_t at = cell * g.n_list.size() + t;
    g.w[at] = w;
    g.benefit[at] = ben;
    g.superadditive[at] = (!gated && w > 0.0 && ben > 0.0) ? 1 : 0;
  }
}

// Bisect one bracket [a, b] with w(a), w(b) of opposite sign.
double bisect_root(const std::function<double(double)>& f, double a, double b, double fa) {
  for (int it = 0; it < 80 && b - a > 1e-10; ++it) {
    const double mid = 0.5 * (a + b);
    const double fm = f(mid);
    if (std::abs(fm) < 1e-12) return mid;
    if ((fm > 0.0) == (fa > 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

// All w_n = 0 crossings along one axis-parallel ray, located on a fixed
// 256-sample scan and refined by bisection.
std::vector<double> ray_roots(std::int64_t n, double fixed, bool fixed_is_pv) {
  constexpr int kSamples = 256;
  const auto f = [&](double t) {
    return fixed_is_pv ? w_n(ChannelParams(t, fixed), n) : w_n(ChannelParams(fixed, t), n);
  };
  std::vector<double> roots;
  double prev_t = (0.5) / kSamples;
  double prev_w = f(prev_t);
  for (int i = 1; i < kSamples; ++i) {
    const double t = (i + 0.5) / kSamples;
    const double w = f(t);
    if ((prev_w > 0.0 && w < 0.0) || (prev_w < 0.0 && w > 0.0))
      roots.push_back(bisect_root(f, prev_t, t, prev_w));
    prev_t = t;
    prev_w = w;
  }
  return roots;
}

BoundaryCurve boundary_impl(std::int64_t n, int ray_count, bool parallel) {
  if (n < 2) throw ValidationError("boundary needs n >= 2");
  if (ray_count < 2) throw ValidationError("boundary needs ray_count >= 2");

  std::vector<std::vector<std::array<double, 2>>> horizontal(
      static_cast<std::size_t>(ray_count));
  std::vector<std::vector<std::array<double, 2>>> vertical(static_cast<std::size_t>(ray_count));

#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int j = 0; j < ray_count; ++j) {
    const double fixed = (j + 0.5) / ray_count;
    for (double r : ray_roots(n, fixed, /*fixed_is_pv=*/true))
      horizontal[static_cast<std::size_t>(j)].push_back({r, fixed});
    for (double r : ray_roots(n, fixed, /*fixed_is_pv=*/false))
      vertical[static_cast<std::size_t>(j)].push_back({fixed, r});
  }

  BoundaryCurve curve;
  curve.n = n;
  for (const auto& pts : horizontal) curve.points.insert(curve.points.end(), pts.begin(), pts.end());
  for (const auto& pts : vertical) curve.points.insert(curve.points.end(), pts.begin(), pts.end());
  return curve;
}

const char* classification_color(Classification c) {
  switch (c) {
    case Classification::Degradable: return "#c85c5c";
    case Classification::Antidegradable: return "#79b27e";
    case Classification::Both: return "#222222";
    case Classification::Neither: return "#ffffff";
  }
  return "#ffffff";
}

const char* contour_color(std::size_t t) {
  static const char* kPalette[] = {"#1f4e9c", "#9c1f8a", "#d97818", "#128a84", "#5c5c0e",
                                   "#7a2020"};
  return kPalette[t % 6];
}

std::string svg_header() {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
         "viewBox=\"0 0 800 800\">\n"
         "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"#ffffff\"/>\n";
}

std::string svg_point(double p_h, double p_v, const char* color) {
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"1.6\" fill=\"%s\"/>\n", p_h * 800.0,
                (1.0 - p_v) * 800.0, color);
  return buf;
}

}  // namespace

RegionGrid scan(int resolution, std::span<const std::int64_t> n_list) {
  validate_scan_args(resolution, n_list);
  RegionGrid g = make_grid(resolution, n_list);
  const int res = resolution;
#pragma omp parallel for schedule(dynamic) collapse(2)
  for (int i = 0; i < res; ++i)
    for (int j = 0; j < res; ++j) scan_cell(g, i, j);
  return g;
}

RegionGrid scan_serial(int resolution, std::span<const std::int64_t> n_list) {
  validate_scan_args(resolution, n_list);
  RegionGrid g = make_grid(resolution, n_list);
  for (int i = 0; i < resolution; ++i)
    for (int j = 0; j < resolution; ++j) scan_cell(g, i, j);
  return g;
}

BoundaryCurve boundary(std::int64_t n, int ray_count) {
  return boundary_impl(n, ray_count, true);
}

BoundaryCurve boundary_serial(std::int64_t n, int ray_count) {
  return boundary_impl(n, ray_count, false);
}

double distance_to_neither_boundary(double p_h, double p_v) {
  const auto seg = [](double ax, double ay, double bx, double by, double px, double py) {
    const double vx = bx - ax, vy = by - ay;
    const double t = std::clamp(((px - ax) * vx + (py - ay) * vy) / (vx * vx + vy * vy), 0.0, 1.0);
    return std::hypot(px - (ax + t * vx), py - (ay + t * vy));
  };
  // Perimeters of [1/2,1]x[0,1/2] and its mirror [0,1/2]x[1/2,1].
  double d = seg(0.5, 0.0, 0.5, 0.5, p_h, p_v);
  d = std::min(d, seg(0.5, 0.5, 1.0, 0.5, p_h, p_v));
  d = std::min(d, seg(1.0, 0.0, 1.0, 0.5, p_h, p_v));
  d = std::min(d, seg(0.5, 0.0, 1.0, 0.0, p_h, p_v));
  d = std::min(d, seg(0.0, 0.5, 0.5, 0.5, p_h, p_v));
  d = std::min(d, seg(0.5, 0.5, 0.5, 1.0, p_h, p_v));
  d = std::min(d, seg(0.0, 0.5, 0.0, 1.0, p_h, p_v));
  d = std::min(d, seg(0.0, 1.0, 0.5, 1.0, p_h, p_v));
  return d;
}

ConvergenceReport convergence_report(std::span<const std::int64_t> n_list, int ray_count) {
  if (n_list.empty()) throw ValidationError("convergence_report needs a nonempty n list");
  for (std::size_t i = 1; i < n_list.size(); ++i)
    if (n_list[i] <= n_list[i - 1])
      throw ValidationError("convergence_report needs ascending n values");

  ConvergenceReport report;
  for (std::int64_t n : n_list) {
    const BoundaryCurve c = boundary(n, ray_count);
    double worst = 0.0;
    for (const auto& pt : c.points)
      worst = std::max(worst, distance_to_neither_boundary(pt[0], pt[1]));
    report.rows.push_back(ConvergenceRow{n, worst});
  }
  const double samples[3][2] = {{0.7, 0.2}, {0.8, 0.3}, {0.65, 0.35}};
  for (const auto& s : samples)
    report.thresholds.push_back(
        ThresholdSample{s[0], s[1], n_threshold(ChannelParams(s[0], s[1]))});
  return report;
}

std::string grid_csv(const RegionGrid& g) {
  std::string out = "p_h,p_v,classification";
  for (std::int64_t n : g.n_list) {
    const std::string sn = std::to_string(n);
    out += ",w_" + sn + ",benefit_" + sn + ",superadditive_" + sn;
  }
  out += "\n";
  for (int i = 0; i < g.resolution; ++i)
    for (int j = 0; j < g.resolution; ++j) {
      const std::size_t cell = g.cell_index(i, j);
      out += format_sig(g.p_h_at(i), 12);
      out += ',';
      out += format_sig(g.p_v_at(j), 12);
      out += ',';
      out += to_string(g.classification[cell]);
      for (std::size_t t = 0; t < g.n_list.size(); ++t) {
        const std::size_t at = cell * g.n_list.size() + t;
        out += ',';
        out += format_sig(g.w[at], 12);
        out += ',';
        out += format_sig(g.benefit[at], 12);
        out += ',';
        out += g.superadditive[at] ? "1" : "0";
      }
      out += '\n';
    }
  return out;
}

std::string grid_json(const RegionGrid& g) {
  JsonWriter w;
  w.begin_object();
  w.key("resolution").value(std::int64_t{g.resolution});
  w.key("n_list").begin_array();
  for (std::int64_t n : g.n_list) w.value(n);
  w.end_array();
  w.key("cells").begin_array();
  for (int i = 0; i < g.resolution; ++i)
    for (int j = 0; j < g.resolution; ++j) {
      const std::size_t cell = g.cell_index(i, j);
      w.begin_object();
      w.key("p_h").value(g.p_h_at(i));
      w.key("p_v").value(g.p_v_at(j));
      w.key("classification").value(std::string(to_string(g.classification[cell])));
      w.key("q1").value(g.q1[cell]);
      w.key("per_n").begin_array();
      for (std::size_t t = 0; t < g.n_list.size(); ++t) {
        const std::size_t at = cell * g.n_list.size() + t;
        w.begin_object();
        w.key("n").value(g.n_list[t]);
        w.key("w").value(g.w[at]);
        w.key("benefit").value(g.benefit[at]);
        w.key("superadditive").value(static_cast<bool>(g.superadditive[at]));
        w.end_object();
      }
      w.end_array();
      w.end_object();
    }
  w.end_array();
  w.end_object();
  std::string out = w.str();
  out += '\n';
  return out;
}

std::string grid_svg(const RegionGrid& g, const std::vector<BoundaryCurve>& contours) {
  std::string out = svg_header();
  const double cell = 800.0 / g.resolution;
  const std::size_t last = g.n_list.empty() ? 0 : g.n_list.size() - 1;
  for (int i = 0; i < g.resolution; ++i)
    for (int j = 0; j < g.resolution; ++j) {
      const std::size_t c = g.cell_index(i, j);
      const char* fill = classification_color(g.classification[c]);
      if (!g.n_list.empty() && g.classification[c] == Classification::Neither &&
          g.superadditive[c * g.n_list.size() + last])
        fill = "#f2d478";
      char buf[192];
      std::snprintf(buf, sizeof buf,
                    "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" fill=\"%s\"/>\n",
                    i * cell, 800.0 - (j + 1) * cell, cell, cell, fill);
      out += buf;
    }
  for (std::size_t t = 0; t < contours.size(); ++t)
    for (const auto& pt : contours[t].points)
      out += svg_point(pt[0], pt[1], contour_color(t));
  out += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"none\" "
         "stroke=\"#000000\" stroke-width=\"1\"/>\n</svg>\n";
  return out;
}

std::string boundary_csv(const BoundaryCurve& c) {
  std::string out = "n,p_h,p_v\n";
  for (const auto& pt : c.points) {
    out += std::to_string(c.n);
    out += ',';
    out += format_sig(pt[0], 12);
    out += ',';
    out += format_sig(pt[1], 12);
    out += '\n';
  }
  return out;
}

std::string boundary_json(const BoundaryCurve& c) {
  JsonWriter w;
  w.begin_object();
  w.key("n").value(c.n);
  w.key("points").begin_array();
  for (const auto& pt : c.points) {
    w.begin_object();
    w.key("p_h").value(pt[0]);
    w.key("p_v").value(pt[1]);
    w.end_object();
  }
  w.end_array();
  w.end_object();
  std::string out = w.str();
  out += '\n';
  return out;
}

std::string boundary_svg(const BoundaryCurve& c) {
  std::string out = svg_header();
  for (const auto& pt : c.points) out += svg_point(pt[0], pt[1], contour_color(0));
  out += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"none\" "
         "stroke=\"#000000\" stroke-width=\"1\"/>\n</svg>\n";
  return out;
}

}  // namespace pdl
