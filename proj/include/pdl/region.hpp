#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pdl/closedform.hpp"

namespace pdl {

inline constexpr int kMaxResolution = 2000;

// Cell-centered grid over (0,1)^2: p_h = (i+1/2)/res, p_v = (j+1/2)/res,
// so no cell sits exactly on a classification or w_n boundary line.
struct RegionGrid {
  int resolution = 0;
  std::vector<std::int64_t> n_list;

  // Row-major over (i, j); per-n arrays are cell-major then n-major:
  // value(i, j, t) = data[cell_index(i, j) * n_list.size() + t].
  std::vector<Classification> classification;
  std::vector<double> q1;
  std::vector<double> w;
  std::vector<double> benefit;
  std::vector<std::uint8_t> superadditive;

  std::size_t cell_index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(resolution) +
           static_cast<std::size_t>(j);
  }
  double p_h_at(int i) const { return (i + 0.5) / resolution; }
  double p_v_at(int j) const { return (j + 0.5) / resolution; }
};

RegionGrid scan(int resolution, std::span<const std::int64_t> n_list);
RegionGrid scan_serial(int resolution, std::span<const std::int64_t> n_list);

// Zero crossings of w_n located by bisection along axis-parallel rays
// (horizontal rays first, ordered by p_v, then vertical ones by p_h).
struct BoundaryCurve {
  std::int64_t n = 0;
  std::vector<std::array<double, 2>> points;  // (p_h, p_v)
};

BoundaryCurve boundary(std::int64_t n, int ray_count);
BoundaryCurve boundary_serial(std::int64_t n, int ray_count);

// Distance to the boundary of {0 < p_min < 1/2 < p_maj < 1}, i.e. to the
// perimeters of the two rectangles [1/2,1]x[0,1/2] and [0,1/2]x[1/2,1].
double distance_to_neither_boundary(double p_h, double p_v);

struct ConvergenceRow {
  std::int64_t n;
  double max_distance;  // max over boundary points of the distance above
};
struct ThresholdSample {
  double p_h, p_v, n0;
};
struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  std::vector<ThresholdSample> thresholds;
};

// n_list must be nonempty and ascending; n = 2 rows are included as the
// straight-line baseline.
ConvergenceReport convergence_report(std::span<const std::int64_t> n_list,
                                     int ray_count = 201);

// Serializers. CSV: ',' delimiter, '.' decimal point, LF endings, header row,
// 12 significant digits. JSON: 17 significant digits. SVG: self-contained
// 800x800, cells colored by classification, superadditive cells (largest n)
// tinted, one dotted contour per n.
std::string grid_csv(const RegionGrid& g);
std::string grid_json(const RegionGrid& g);
std::string grid_svg(const RegionGrid& g, const std::vector<BoundaryCurve>& contours);
std::string boundary_csv(const BoundaryCurve& c);
std::string boundary_json(const BoundaryCurve& c);
std::string boundary_svg(const BoundaryCurve& c);

}  // namespace pdl
