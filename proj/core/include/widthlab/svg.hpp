#pragma once

#include <string>
#include <vector>

namespace widthlab {

// Self-contained SVG writers; no external plotting dependency. All output is
// deterministic for identical inputs.

struct HeatmapSpec {
  std::string title;
  std::string x_label, y_label;
  std::vector<double> x_ticks;            // column coordinates (e.g. m values)
  std::vector<double> y_ticks;            // row coordinates (e.g. s values)
  std::vector<std::vector<double>> cells; // cells[row][col] in [0,1]; NaN = skipped
};

std::string svg_heatmap(const HeatmapSpec& spec);

struct LineSeries {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

struct LinePlotSpec {
  std::string title;
  std::string x_label, y_label;
  bool log_x = false;
  bool log_y = false;
  std::vector<LineSeries> series;
};

std::string svg_line_plot(const LinePlotSpec& spec);

}  // namespace widthlab
