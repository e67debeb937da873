#pragma once

#include <string>
#include <vector>

namespace qubitfit {

struct PlotSeries {
  std::string label;
  std::string color;  // any SVG color, e.g. "red"
  std::vector<double> x;
  std::vector<double> y;
};

struct PlotOptions {
  std::string title;
  std::string x_label = "x";
  std::string y_label;
  int ticks = 5;
};

/// Standalone SVG document, 800x600 viewBox, with axes, tick labels, one
/// polyline per series and a legend. Throws std::invalid_argument for empty
/// or mismatched series.
std::string render_line_plot(const std::vector<PlotSeries>& series,
                             const PlotOptions& options);

/// `n` evenly spaced values over [lo, hi] inclusive.
std::vector<double> linspace(double lo, double hi, std::size_t n);

}  // namespace qubitfit
