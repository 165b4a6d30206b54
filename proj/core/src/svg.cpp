#include "widthlab/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace widthlab {

namespace {

constexpr int kWidth = 720;
constexpr int kHeight = 480;
constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 30;
constexpr int kMarginTop = 40;
constexpr int kMarginBottom = 55;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Three-stop color map (dark blue -> teal -> yellow).
std::string colormap(double t) {
  t = std::clamp(t, 0.0, 1.0);
  const double stops[3][3] = {{68, 1, 84}, {33, 145, 140}, {253, 231, 37}};
  double rgb[3];
  const double pos = t * 2.0;
  const int band = pos < 1.0 ? 0 : 1;
  const double f = pos - band;
  for (int c = 0; c < 3; ++c) rgb[c] = stops[band][c] + f * (stops[band + 1][c] - stops[band][c]);
  char buf[16];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", static_cast<int>(rgb[0]),
                static_cast<int>(rgb[1]), static_cast<int>(rgb[2]));
  return buf;
}

std::string header() {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(kWidth) + "\" height=\"" + std::to_string(kHeight) +
         "\" viewBox=\"0 0 " + std::to_string(kWidth) + " " + std::to_string(kHeight) +
         "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

std::string text(double x, double y, const std::string& s, int size = 12,
                 const std::string& anchor = "middle") {
  return "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-family=\"sans-serif\" font-size=\"" +
         std::to_string(size) + "\" text-anchor=\"" + anchor + "\">" + escape(s) + "</text>\n";
}

}  // namespace

std::string svg_heatmap(const HeatmapSpec& spec) {
  const int rows = static_cast<int>(spec.cells.size());
  const int cols = rows > 0 ? static_cast<int>(spec.cells[0].size()) : 0;
  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;

  std::string out = header();
  out += text(kWidth / 2.0, kMarginTop - 15, spec.title, 15);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const double v = spec.cells[r][c];
      const double x = kMarginLeft + c * plot_w / std::max(1, cols);
      const double y = kMarginTop + (rows - 1 - r) * plot_h / std::max(1, rows);
      const std::string fill = std::isnan(v) ? "#cccccc" : colormap(v);
      out += "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" +
             num(plot_w / std::max(1, cols)) + "\" height=\"" + num(plot_h / std::max(1, rows)) +
             "\" fill=\"" + fill + "\" stroke=\"white\" stroke-width=\"0.5\"/>\n";
    }
  }
  for (int c = 0; c < cols && c < static_cast<int>(spec.x_ticks.size()); ++c) {
    const double x = kMarginLeft + (c + 0.5) * plot_w / std::max(1, cols);
    out += text(x, kHeight - kMarginBottom + 18, num(spec.x_ticks[c]), 11);
  }
  for (int r = 0; r < rows && r < static_cast<int>(spec.y_ticks.size()); ++r) {
    const double y = kMarginTop + (rows - 1 - r + 0.5) * plot_h / std::max(1, rows);
    out += text(kMarginLeft - 10, y + 4, num(spec.y_ticks[r]), 11, "end");
  }
  out += text(kWidth / 2.0, kHeight - 15, spec.x_label, 13);
  out += text(18, kHeight / 2.0, spec.y_label, 13);
  out += "</svg>\n";
  return out;
}

std::string svg_line_plot(const LinePlotSpec& spec) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  const auto tx = [&](double x) { return spec.log_x ? std::log10(x) : x; };
  const auto ty = [&](double y) { return spec.log_y ? std::log10(y) : y; };
  for (const auto& s : spec.series) {
    for (const auto& [x, y] : s.points) {
      if (spec.log_x && x <= 0) continue;
      if (spec.log_y && y <= 0) continue;
      xmin = std::min(xmin, tx(x));
      xmax = std::max(xmax, tx(x));
      ymin = std::min(ymin, ty(y));
      ymax = std::max(ymax, ty(y));
    }
  }
  if (!(xmax > xmin)) { xmax = xmin + 1; }
  if (!(ymax > ymin)) { ymax = ymin + 1; }
  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  const auto px = [&](double x) { return kMarginLeft + (tx(x) - xmin) / (xmax - xmin) * plot_w; };
  const auto py = [&](double y) { return kMarginTop + (1.0 - (ty(y) - ymin) / (ymax - ymin)) * plot_h; };

  const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

  std::string out = header();
  out += text(kWidth / 2.0, kMarginTop - 15, spec.title, 15);
  out += "<rect x=\"" + num(kMarginLeft) + "\" y=\"" + num(kMarginTop) + "\" width=\"" +
         num(plot_w) + "\" height=\"" + num(plot_h) +
         "\" fill=\"none\" stroke=\"#444444\"/>\n";

  // corner tick labels
  out += text(kMarginLeft, kHeight - kMarginBottom + 18,
              spec.log_x ? "1e" + num(xmin) : num(xmin), 11);
  out += text(kMarginLeft + plot_w, kHeight - kMarginBottom + 18,
              spec.log_x ? "1e" + num(xmax) : num(xmax), 11);
  out += text(kMarginLeft - 8, kMarginTop + plot_h + 4,
              spec.log_y ? "1e" + num(ymin) : num(ymin), 11, "end");
  out += text(kMarginLeft - 8, kMarginTop + 10, spec.log_y ? "1e" + num(ymax) : num(ymax), 11,
              "end");

  for (size_t si = 0; si < spec.series.size(); ++si) {
    const auto& s = spec.series[si];
    const std::string color = palette[si % 6];
    std::string pts;
    for (const auto& [x, y] : s.points) {
      if ((spec.log_x && x <= 0) || (spec.log_y && y <= 0)) continue;
      pts += num(px(x)) + "," + num(py(y)) + " ";
      out += "<circle cx=\"" + num(px(x)) + "\" cy=\"" + num(py(y)) + "\" r=\"3\" fill=\"" +
             color + "\"/>\n";
    }
    if (!pts.empty()) {
      out += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + color +
             "\" stroke-width=\"1.5\"/>\n";
    }
    out += "<rect x=\"" + num(kMarginLeft + 10) + "\" y=\"" +
           num(kMarginTop + 10 + 18.0 * si) + "\" width=\"12\" height=\"12\" fill=\"" + color +
           "\"/>\n";
    out += text(kMarginLeft + 28, kMarginTop + 20 + 18.0 * si, s.name, 12, "start");
  }
  out += text(kWidth / 2.0, kHeight - 15, spec.x_label, 13);
  out += text(18, kHeight / 2.0, spec.y_label, 13);
  out += "</svg>\n";
  return out;
}

}  // namespace widthlab
