#include "tightcycle/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <tuple>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace tightcycle {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

}  // namespace

double bound_curve(int k, int j, double c) {
  const double w = k - j;
  return (1.0 - std::pow(c, -1.0 / w)) / w;
}

std::vector<PlotPoint> read_plot_points(std::istream& csv) {
  std::string line;
  if (!std::getline(csv, line)) throw std::invalid_argument("empty results file");
  const auto header = split_csv(line);
  auto column = [&](const char* name) {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw std::invalid_argument(std::string("results file lacks column ") + name);
    return static_cast<std::size_t>(it - header.begin());
  };
  const std::size_t kind = column("kind"), k = column("k"), j = column("j"), c = column("c");
  const std::size_t mean = column("mean_lc_over_n"), lc = column("lc_over_n");

  using Key = std::tuple<int, int, double>;
  std::map<Key, double> aggregates;
  std::map<Key, std::pair<double, int>> trials;
  while (std::getline(csv, line)) {
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != header.size()) throw std::invalid_argument("results row has the wrong width");
    const Key key{std::stoi(f[k]), std::stoi(f[j]), std::stod(f[c])};
    if (f[kind] == "aggregate") {
      aggregates[key] = std::stod(f[mean]);
    } else if (f[kind] == "trial") {
      auto& t = trials[key];
      t.first += std::stod(f[lc]);
      ++t.second;
    }
  }
  std::vector<PlotPoint> points;
  if (!aggregates.empty()) {
    for (const auto& [key, m] : aggregates) points.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), m});
  } else {
    for (const auto& [key, t] : trials)
      points.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), t.first / t.second});
  }
  return points;
}

void plot_curve(std::ostream& svg, const std::vector<PlotPoint>& points) {
  if (points.empty()) throw std::invalid_argument("nothing to plot");
  std::map<std::pair<int, int>, std::vector<PlotPoint>> panels;
  for (const PlotPoint& p : points) panels[{p.k, p.j}].push_back(p);

  const double pw = 360, ph = 300, left = 50, right = 15, top = 30, bottom = 40;
  const double width = pw * static_cast<double>(panels.size());
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(ph)
      << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  double x0 = 0;
  for (const auto& [kj, pts] : panels) {
    const auto [k, j] = kj;
    double cmax = 2.0;
    double ymax = 1.0 / (k - j);
    for (const PlotPoint& p : pts) {
      cmax = std::max(cmax, p.c);
      ymax = std::max(ymax, p.mean_lc_over_n);
    }
    cmax *= 1.1;
    const double ax = x0 + left, ay = top, aw = pw - left - right, ah = ph - top - bottom;
    auto sx = [&](double c) { return ax + (c - 1.0) / (cmax - 1.0) * aw; };
    auto sy = [&](double y) { return ay + ah - y / ymax * ah; };

    svg << "<g>\n<text x=\"" << num(ax + aw / 2) << "\" y=\"18\" text-anchor=\"middle\">k=" << k << ", j=" << j
        << "</text>\n";
    svg << "<rect x=\"" << num(ax) << "\" y=\"" << num(ay) << "\" width=\"" << num(aw) << "\" height=\"" << num(ah)
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int t = 0; t <= 4; ++t) {
      const double y = ymax * t / 4;
      svg << "<text x=\"" << num(ax - 4) << "\" y=\"" << num(sy(y) + 4) << "\" text-anchor=\"end\">" << num(y)
          << "</text>\n";
      const double c = 1.0 + (cmax - 1.0) * t / 4;
      svg << "<text x=\"" << num(sx(c)) << "\" y=\"" << num(ay + ah + 14) << "\" text-anchor=\"middle\">" << num(c)
          << "</text>\n";
    }
    svg << "<text x=\"" << num(ax + aw / 2) << "\" y=\"" << num(ph - 6) << "\" text-anchor=\"middle\">c</text>\n";
    svg << "<text x=\"" << num(x0 + 12) << "\" y=\"" << num(ay + ah / 2) << "\" transform=\"rotate(-90 "
        << num(x0 + 12) << ' ' << num(ay + ah / 2) << ")\" text-anchor=\"middle\">L_C / n</text>\n";
    svg << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
    for (int t = 0; t <= 100; ++t) {
      const double c = 1.0 + (cmax - 1.0) * t / 100;
      svg << (t ? " " : "") << num(sx(c)) << ',' << num(sy(bound_curve(k, j, c)));
    }
    svg << "\"/>\n";
    for (const PlotPoint& p : pts)
      svg << "<circle cx=\"" << num(sx(p.c)) << "\" cy=\"" << num(sy(p.mean_lc_over_n))
          << "\" r=\"4\" fill=\"firebrick\"><title>c=" << num(p.c) << " mean=" << num(p.mean_lc_over_n)
          << "</title></circle>\n";
    svg << "</g>\n";
    x0 += pw;
  }
  svg << "</svg>\n";
}

}  // namespace tightcycle
