#pragma once

#include <iosfwd>
#include <vector>

namespace tightcycle {

struct PlotPoint {
  int k = 0;
  int j = 0;
  double c = 0.0;
  double mean_lc_over_n = 0.0;
};

// (1 - c^(-1/(k-j))) / (k-j).
double bound_curve(int k, int j, double c);

// Points from a results CSV: aggregate rows when present, otherwise the mean
// of the trial rows per (k, j, c). Throws std::invalid_argument on a foreign
// header.
std::vector<PlotPoint> read_plot_points(std::istream& csv);

// One panel per (k, j): the points and the curve over c. Throws
// std::invalid_argument on an empty point set.
void plot_curve(std::ostream& svg, const std::vector<PlotPoint>& points);

}  // namespace tightcycle
